//! The infinitesimal Cherednik algebra `H_c` of gl2: relation tables,
//! the Casimir embedding, the involutions and the distinguished elements.

use crate::calculus::fg::fg;
use crate::calculus::jacobi_residual;
use crate::central::CentralPoly;
use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::ncpoly::NcPoly;
use crate::rewrite::Normalizer;
use crate::table::{RelationTable, DEFAULT_STEP_BUDGET};

use Gen::*;

fn k<K: Coeff>(n: i64) -> K {
    K::from_i64(n)
}

fn lin<K: Coeff>(order: GenOrder, terms: &[(i64, &[Gen])]) -> NcPoly<K> {
    NcPoly::from_terms(order, terms.iter().map(|(c, w)| (w.to_vec(), k(*c))))
}

/// Brackets of gl2 ⋉ V, without deformation.
fn semidirect_brackets<K: Coeff>(order: GenOrder) -> Vec<(Gen, Gen, NcPoly<K>)> {
    let g = |x: Gen| NcPoly::gen(order, x);
    vec![
        (H, E, g(E).scale(&k(2))),
        (H, F, g(F).scale(&k(-2))),
        (E, F, g(H)),
        (H, X, g(X)),
        (H, Y, -g(Y)),
        (H, X1, g(X1)),
        (H, Y1, -g(Y1)),
        (E, Y, g(X)),
        (E, Y1, g(X1)),
        (F, X, g(Y)),
        (F, X1, g(Y1)),
        (Tau, X, g(X)),
        (Tau, Y, g(Y)),
        (Tau, X1, -g(X1)),
        (Tau, Y1, -g(Y1)),
    ]
}

/// The undeformed `H = U(gl2 ⋉ V)`.
pub fn undeformed_table<K: Coeff>(order: GenOrder, step_budget: u64) -> Result<RelationTable<K>> {
    RelationTable::new(order, semidirect_brackets(order), step_budget)
}

/// Normal-ordered Casimir `h^2 + 4ef - 2h` (default order), written as raw
/// words so it can be renormalized in any order.
pub fn casimir_words<K: Coeff>(order: GenOrder) -> NcPoly<K> {
    lin(order, &[(1, &[H, H]), (4, &[E, F]), (-2, &[H])])
}

/// Image of a central polynomial in the enveloping algebra, `Delta` as the
/// Casimir and `tau` as itself, normal for `table`'s order.
pub fn embed_central<K: Coeff>(p: &CentralPoly<K>, table: &RelationTable<K>) -> Result<NcPoly<K>> {
    let mut n = Normalizer::new(table);
    embed_with(&mut n, p)
}

pub(crate) fn embed_with<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    p: &CentralPoly<K>,
) -> Result<NcPoly<K>> {
    let order = n.table().order();
    let delta = n.normalize(&casimir_words(order))?;
    let tau = NcPoly::gen(order, Tau);
    let max_d = p.delta_degree().unwrap_or(0);
    let max_t = p.tau_degree().unwrap_or(0);
    let mut dpow = vec![NcPoly::one(order)];
    for i in 0..max_d as usize {
        let next = n.mul(&dpow[i], &delta)?;
        dpow.push(next);
    }
    let mut tpow = vec![NcPoly::one(order)];
    for i in 0..max_t as usize {
        let next = n.mul(&tpow[i], &tau)?;
        tpow.push(next);
    }
    let mut out = NcPoly::zero(order);
    for (&(dn, tm), c) in p.terms() {
        let prod = n.mul(&tpow[tm as usize], &dpow[dn as usize])?;
        out.add_scaled(&prod, c);
    }
    Ok(out)
}

/// The four named elements, normal in the algebra's default order.
#[derive(Clone, Debug)]
pub struct Distinguished<K: Coeff> {
    /// `y1 x - x1 y`
    pub b: NcPoly<K>,
    /// `tau (y1 x - x1 y) - (2 e y1 y + h (y1 x + x1 y) - 2 f x1 x)`
    pub d: NcPoly<K>,
    /// `e y^2 + h x y - f x^2`
    pub t1: NcPoly<K>,
    /// `e y1^2 + h x1 y1 - f x1^2`
    pub t2: NcPoly<K>,
}

/// `b` and `d` as raw words.
pub fn b_words<K: Coeff>(order: GenOrder) -> NcPoly<K> {
    lin(order, &[(1, &[Y1, X]), (-1, &[X1, Y])])
}

pub fn d_words<K: Coeff>(order: GenOrder) -> NcPoly<K> {
    lin(
        order,
        &[
            (1, &[Tau, Y1, X]),
            (-1, &[Tau, X1, Y]),
            (-2, &[E, Y1, Y]),
            (-1, &[H, Y1, X]),
            (-1, &[H, X1, Y]),
            (2, &[F, X1, X]),
        ],
    )
}

pub fn t1_words<K: Coeff>(order: GenOrder) -> NcPoly<K> {
    lin(order, &[(1, &[E, Y, Y]), (1, &[H, X, Y]), (-1, &[F, X, X])])
}

pub fn t2_words<K: Coeff>(order: GenOrder) -> NcPoly<K> {
    lin(
        order,
        &[(1, &[E, Y1, Y1]), (1, &[H, X1, Y1]), (-1, &[F, X1, X1])],
    )
}

/// `H_c` for a central parameter `c`.
///
/// Built for any `c`; `is_admissible` records whether the Jacobi condition
/// holds. The table is stored in both generator orders.
#[derive(Clone, Debug)]
pub struct Gl2Cherednik<K: Coeff> {
    c: CentralPoly<K>,
    f_c: CentralPoly<K>,
    g_c: CentralPoly<K>,
    residual: CentralPoly<K>,
    table: RelationTable<K>,
    triangular: RelationTable<K>,
}

impl<K: Coeff> Gl2Cherednik<K> {
    pub fn build(c: CentralPoly<K>) -> Result<Self> {
        Self::build_with_budget(c, DEFAULT_STEP_BUDGET)
    }

    pub fn undeformed() -> Result<Self> {
        Self::build(CentralPoly::zero())
    }

    pub fn build_with_budget(c: CentralPoly<K>, step_budget: u64) -> Result<Self> {
        let (f_c, g_c) = fg(&c);
        let residual = jacobi_residual(&c);
        let table = Self::make_table(GenOrder::Default, &f_c, &g_c, step_budget)?;
        let triangular = Self::make_table(GenOrder::Triangular, &f_c, &g_c, step_budget)?;
        if !table.is_biweight_homogeneous() {
            return Err(EngineError::MalformedTable(
                "table is not biweight-homogeneous".into(),
            ));
        }
        Ok(Gl2Cherednik {
            c,
            f_c,
            g_c,
            residual,
            table,
            triangular,
        })
    }

    fn make_table(
        order: GenOrder,
        f_c: &CentralPoly<K>,
        g_c: &CentralPoly<K>,
        step_budget: u64,
    ) -> Result<RelationTable<K>> {
        let base = undeformed_table::<K>(order, step_budget)?;
        let f_emb = embed_central(f_c, &base)?;
        let g_emb = embed_central(g_c, &base)?;
        let h = NcPoly::gen(order, H);
        let two_h_f = h.concat(&f_emb).scale(&k(2));
        let mut brackets = semidirect_brackets(order);
        brackets.extend([
            (X, Y, NcPoly::zero(order)),
            (X1, Y1, NcPoly::zero(order)),
            (Y1, X, two_h_f.clone() + g_emb.clone()),
            (X1, X, NcPoly::gen(order, E).concat(&f_emb).scale(&k(-4))),
            (Y1, Y, NcPoly::gen(order, F).concat(&f_emb).scale(&k(4))),
            (X1, Y, two_h_f - g_emb),
        ]);
        RelationTable::new(order, brackets, step_budget)
    }

    pub fn c(&self) -> &CentralPoly<K> {
        &self.c
    }

    /// `F(c)`
    pub fn f_c(&self) -> &CentralPoly<K> {
        &self.f_c
    }

    /// `G(c)`
    pub fn g_c(&self) -> &CentralPoly<K> {
        &self.g_c
    }

    pub fn jacobi_residual(&self) -> &CentralPoly<K> {
        &self.residual
    }

    pub fn is_admissible(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn table(&self) -> &RelationTable<K> {
        &self.table
    }

    pub fn table_for(&self, order: GenOrder) -> &RelationTable<K> {
        match order {
            GenOrder::Default => &self.table,
            GenOrder::Triangular => &self.triangular,
        }
    }

    pub fn step_budget(&self) -> u64 {
        self.table.step_budget()
    }

    pub fn gen(&self, g: Gen) -> NcPoly<K> {
        NcPoly::gen(GenOrder::Default, g)
    }

    pub fn normalizer(&self) -> Normalizer<'_, K> {
        Normalizer::new(&self.table)
    }

    pub fn normalize(&self, p: &NcPoly<K>) -> Result<NcPoly<K>> {
        Normalizer::new(self.table_for(p.order())).normalize(p)
    }

    pub fn mul(&self, a: &NcPoly<K>, b: &NcPoly<K>) -> Result<NcPoly<K>> {
        Normalizer::new(self.table_for(a.order())).mul(a, b)
    }

    pub fn commutator(&self, a: &NcPoly<K>, b: &NcPoly<K>) -> Result<NcPoly<K>> {
        Normalizer::new(self.table_for(a.order())).commutator(a, b)
    }

    /// Re-express an element in another generator order.
    pub fn convert(&self, p: &NcPoly<K>, order: GenOrder) -> Result<NcPoly<K>> {
        Normalizer::new(self.table_for(order)).normalize(&p.clone().with_order(order))
    }

    pub fn embed(&self, p: &CentralPoly<K>) -> Result<NcPoly<K>> {
        embed_central(p, &self.table)
    }

    /// The anti-involution with `x -> y1`, `x1 -> -y`, `e -> f`, `h -> h`,
    /// `tau -> tau`, extended by `y -> -x1`, `y1 -> x`, `f -> e`.
    pub fn apply_eta(&self, a: &NcPoly<K>) -> Result<NcPoly<K>> {
        let raw = a.map_words(|w| {
            let mut sign = K::one();
            let image = w
                .iter()
                .rev()
                .map(|&g| {
                    let (img, neg) = match g {
                        X => (Y1, false),
                        X1 => (Y, true),
                        Y => (X1, true),
                        Y1 => (X, false),
                        E => (F, false),
                        F => (E, false),
                        H => (H, false),
                        Tau => (Tau, false),
                    };
                    if neg {
                        sign = -sign.clone();
                    }
                    img
                })
                .collect();
            (image, sign)
        });
        self.normalize(&raw)
    }

    /// The anti-involution of the subalgebra generated by `e, f, h, x, y`
    /// with `x <-> y`, `h -> h`, `e -> -f`, `f -> -e`.
    pub fn apply_j(&self, a: &NcPoly<K>) -> Result<NcPoly<K>> {
        if [Tau, X1, Y1].iter().any(|&g| a.contains_gen(g)) {
            return Err(EngineError::OutsideSubalgebra(a.to_string()));
        }
        let raw = a.map_words(|w| {
            let mut sign = K::one();
            let image = w
                .iter()
                .rev()
                .map(|&g| match g {
                    X => Y,
                    Y => X,
                    H => H,
                    E => {
                        sign = -sign.clone();
                        F
                    }
                    F => {
                        sign = -sign.clone();
                        E
                    }
                    _ => unreachable!("checked above"),
                })
                .collect();
            (image, sign)
        });
        self.normalize(&raw)
    }

    pub fn distinguished_elements(&self) -> Result<Distinguished<K>> {
        let o = GenOrder::Default;
        let mut n = self.normalizer();
        Ok(Distinguished {
            b: n.normalize(&b_words(o))?,
            d: n.normalize(&d_words(o))?,
            t1: n.normalize(&t1_words(o))?,
            t2: n.normalize(&t2_words(o))?,
        })
    }

    /// Residuals `eta([a, b]) - [eta(b), eta(a)]` over all generator pairs;
    /// empty when eta preserves the relations.
    pub fn eta_relation_defects(&self) -> Result<Vec<(Gen, Gen, NcPoly<K>)>> {
        let mut out = Vec::new();
        for a in Gen::ALL {
            for b in Gen::ALL {
                if a >= b {
                    continue;
                }
                let lhs = self.apply_eta(self.table.bracket(a, b))?;
                let rhs = self.commutator(
                    &self.apply_eta(&self.gen(b))?,
                    &self.apply_eta(&self.gen(a))?,
                )?;
                let defect = lhs - rhs;
                if !defect.is_zero() {
                    out.push((a, b, defect));
                }
            }
        }
        Ok(out)
    }
}
