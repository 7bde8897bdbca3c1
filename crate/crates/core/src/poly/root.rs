use super::{Degree, Polynomial};
use crate::algebra::{Field, RootExtraction};
use crate::error::{Error, Result};

impl<E: RootExtraction> Polynomial<E> {
    /// Finds `r` with `r^m = self`, if one exists.
    ///
    /// Each m-th root of the leading coefficient (in the canonical order of
    /// [`RootExtraction::nth_roots`]) seeds a top-down recursion for the
    /// remaining coefficients; the first seed whose result re-powers to
    /// `self` wins. So over the rationals the root has positive leading
    /// coefficient whenever that is possible, and over `F_p` the smallest
    /// leading residue is preferred.
    pub fn nth_root(&self, m: u32) -> Result<Option<Self>> {
        if m == 0 {
            return Err(Error::InvalidInput("root index must be at least 1".into()));
        }
        self.field
            .require_coprime_exponent(m as u64, "m-th roots need char not dividing m")?;
        let n = match self.degree() {
            Degree::NegInfinity => return Ok(Some(self.clone())),
            Degree::Finite(n) => n,
        };
        if m == 1 {
            return Ok(Some(self.clone()));
        }
        if n % m as usize != 0 {
            return Ok(None);
        }
        let k = n / m as usize;
        let m_elem = self.field.from_i64(m as i64);
        for lead in self.leading().expect("nonzero").nth_roots(m) {
            let denom = m_elem.times(&lead.pow(m as u64 - 1));
            let denom_inv = denom.inverse()?;
            let mut root = Self::monomial(lead, k);
            for j in 1..=k {
                let residual = self.sub_unchecked(&root.pow(m as u64));
                let c = residual.coeff(n - j).times(&denom_inv);
                if !c.is_zero() {
                    root = root.add_unchecked(&Self::monomial(c, k - j));
                }
            }
            if root.pow(m as u64) == *self {
                return Ok(Some(root));
            }
        }
        Ok(None)
    }
}
