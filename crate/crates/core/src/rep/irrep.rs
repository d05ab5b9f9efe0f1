//! Finite-dimensional irreducible representations of gl2.

use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::Gen;
use crate::ncpoly::NcPoly;

/// `V(lambda, mu)` on the basis `v_0..v_lambda`:
/// `h v_i = (lambda - 2i) v_i`, `f v_i = v_{i+1}`,
/// `e v_i = i (lambda - i + 1) v_{i-1}`, `tau` acts by `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl2Irrep<K: Coeff> {
    lambda: u64,
    mu: K,
}

impl<K: Coeff> Gl2Irrep<K> {
    pub fn new(lambda: u64, mu: K) -> Self {
        Gl2Irrep { lambda, mu }
    }

    pub fn dim(&self) -> usize {
        self.lambda as usize + 1
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> &K {
        &self.mu
    }

    /// Image of a vector under one gl2 generator.
    pub fn act_gen(&self, g: Gen, v: &[K]) -> Result<Vec<K>> {
        let n = self.dim();
        let lam = self.lambda as i64;
        let mut out = vec![K::zero(); n];
        match g {
            Gen::H => {
                for i in 0..n {
                    out[i] = K::from_i64(lam - 2 * i as i64) * v[i].clone();
                }
            }
            Gen::F => {
                for i in 0..n - 1 {
                    out[i + 1] = v[i].clone();
                }
            }
            Gen::E => {
                for i in 1..n {
                    let ii = i as i64;
                    out[i - 1] = K::from_i64(ii * (lam - ii + 1)) * v[i].clone();
                }
            }
            Gen::Tau => {
                for i in 0..n {
                    out[i] = self.mu.clone() * v[i].clone();
                }
            }
            _ => {
                return Err(EngineError::Invalid(format!(
                    "{g} does not act on a gl2 module"
                )))
            }
        }
        Ok(out)
    }

    /// Image of a vector under an element of `U(gl2)`.
    pub fn act(&self, p: &NcPoly<K>, v: &[K]) -> Result<Vec<K>> {
        let mut out = vec![K::zero(); self.dim()];
        for (w, c) in p.terms() {
            let mut cur = v.to_vec();
            for &g in w.iter().rev() {
                cur = self.act_gen(g, &cur)?;
            }
            for (o, x) in out.iter_mut().zip(cur) {
                *o += c.clone() * x;
            }
        }
        Ok(out)
    }

    fn basis_vector(&self, i: usize) -> Vec<K> {
        let mut v = vec![K::zero(); self.dim()];
        v[i] = K::one();
        v
    }

    /// Whether `p` acts as the zero operator.
    pub fn annihilates(&self, p: &NcPoly<K>) -> Result<bool> {
        for i in 0..self.dim() {
            if self
                .act(p, &self.basis_vector(i))?
                .iter()
                .any(|x| !x.is_zero())
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of `p`, columns are images of basis vectors.
    pub fn matrix(&self, p: &NcPoly<K>) -> Result<Vec<Vec<K>>> {
        let cols: Vec<Vec<K>> = (0..self.dim())
            .map(|i| self.act(p, &self.basis_vector(i)))
            .collect::<Result<_>>()?;
        Ok((0..self.dim())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect())
    }
}
