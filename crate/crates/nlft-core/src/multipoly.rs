//! Truncated multivariate polynomials in `N` formal variables with
//! 2×2-matrix coefficients, capped at a fixed total degree. Products close
//! over the cap by dropping higher-degree terms, which makes the type a
//! genuine truncated polynomial ring; stored coefficients are raw Taylor
//! coefficients (no factorial weights).

use crate::mat2::Mat2;
use num_complex::Complex64 as C64;
use std::collections::BTreeMap;

/// Exponent vector of one monomial `u_0^{k_0} ... u_{N-1}^{k_{N-1}}`.
pub type Exponents = Vec<u16>;

#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    n_vars: usize,
    degree_cap: usize,
    terms: BTreeMap<Exponents, Mat2>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize, degree_cap: usize) -> Self {
        assert!(n_vars >= 1, "need at least one variable");
        Self {
            n_vars,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: Mat2, n_vars: usize, degree_cap: usize) -> Self {
        let mut poly = Self::zero(n_vars, degree_cap);
        poly.insert(vec![0; n_vars], m);
        poly
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Adds `m` to the coefficient of the monomial `k`; silently drops terms
    /// beyond the degree cap (that is what truncation means here).
    pub fn insert(&mut self, k: Exponents, m: Mat2) {
        assert_eq!(k.len(), self.n_vars, "exponent vector length mismatch");
        if k.iter().map(|&e| e as usize).sum::<usize>() > self.degree_cap {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Mat2::zero);
        *entry = *entry + m;
    }

    /// The coefficient of the monomial `k` (zero when absent).
    pub fn coeff(&self, k: &[u16]) -> Mat2 {
        self.terms.get(k).copied().unwrap_or_else(Mat2::zero)
    }

    /// Iterates stored terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Mat2)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Truncated product; coefficient order follows the matrix product
    /// (`self` on the left).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n_vars, rhs.n_vars, "variable counts must match");
        let cap = self.degree_cap.min(rhs.degree_cap);
        let mut out = Self::zero(self.n_vars, cap);
        for (ka, ma) in &self.terms {
            let da: usize = ka.iter().map(|&e| e as usize).sum();
            if da > cap {
                continue;
            }
            for (kb, mb) in &rhs.terms {
                let db: usize = kb.iter().map(|&e| e as usize).sum();
                if da + db > cap {
                    continue;
                }
                let k: Exponents = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.insert(k, *ma * *mb);
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            n_vars: self.n_vars,
            degree_cap: self.degree_cap,
            terms: self
                .terms
                .iter()
                .map(|(k, m)| (k.clone(), m.scale(s)))
                .collect(),
        }
    }

    /// Evaluates the polynomial at a point (for cross-checks).
    pub fn eval(&self, point: &[f64]) -> Mat2 {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = Mat2::zero();
        for (k, m) in &self.terms {
            let monomial: f64 = k
                .iter()
                .zip(point)
                .map(|(&e, &x)| x.powi(i32::from(e)))
                .product();
            acc = acc + m.scale(C64::new(monomial, 0.0));
        }
        acc
    }
}
