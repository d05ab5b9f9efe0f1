mod common;

use cherednik_core::{CentralPoly, Coeff, Fp, GenOrder, Gl2Cherednik, NcPoly, Rational};
use common::{family_member, random_poly, rng};

fn reduce<const P: u32>(p: &NcPoly<Rational>) -> Option<NcPoly<Fp<P>>> {
    let mut out = NcPoly::zero(p.order());
    for (w, c) in p.terms() {
        out.add_term(w.clone(), Fp::<P>::from_ratio(c.numer(), c.denom())?);
    }
    Some(out)
}

#[test]
fn normal_forms_commute_with_reduction_mod_5() {
    let c = family_member(1, 3, 1, 1);
    let cq = Gl2Cherednik::build(c.clone()).unwrap();
    let c5 = Gl2Cherednik::build(CentralPoly::from_terms(
        c.terms()
            .map(|(&key, k)| (key, Fp::<5>::from_ratio(k.numer(), k.denom()).unwrap())),
    ))
    .unwrap();
    let mut r = rng(5);
    let mut nq = cq.normalizer();
    let mut n5 = c5.normalizer();
    let mut checked = 0;
    for _ in 0..60 {
        let a = random_poly(&mut r, GenOrder::Default, 3, 3);
        let b = random_poly(&mut r, GenOrder::Default, 3, 3);
        let (Some(a5), Some(b5)) = (reduce::<5>(&a), reduce::<5>(&b)) else {
            continue;
        };
        let over_q = nq.mul(&a, &b).unwrap();
        let Some(expect) = reduce::<5>(&over_q) else {
            continue;
        };
        assert_eq!(n5.mul(&a5, &b5).unwrap(), expect, "a = {a}, b = {b}");
        checked += 1;
    }
    assert!(checked > 40);
}

#[test]
fn order_conversion_round_trips() {
    let alg = Gl2Cherednik::build(family_member(1, 3, 0, 1)).unwrap();
    let mut n = alg.normalizer();
    let mut r = rng(11);
    for _ in 0..40 {
        let a = random_poly(&mut r, GenOrder::Default, 4, 3);
        let a = n.normalize(&a).unwrap();
        let t = alg.convert(&a, GenOrder::Triangular).unwrap();
        assert!(t.is_normal());
        assert_eq!(alg.convert(&t, GenOrder::Default).unwrap(), a);
    }
}
