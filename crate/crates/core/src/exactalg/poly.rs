use std::fmt;

use serde::Serialize;

use super::rat::Rat;

/// Univariate polynomial in `t` with rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `t + a`
    pub fn linear(a: Rat) -> Self {
        UniPoly::new(vec![a, Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&Rat::from(-1)))
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// `C(t + a, m)` as a polynomial in `t`: `(t+a)(t+a-1)...(t+a-m+1) / m!`.
    pub fn binomial(a: i64, m: usize) -> UniPoly {
        let mut p = UniPoly::constant(Rat::one());
        for i in 0..m {
            p = p.mul(&UniPoly::linear(Rat::from(a - i as i64)));
            p = p.scale(&Rat::new(1, (i + 1) as i64));
        }
        p
    }

    /// Unique polynomial of degree < points.len() through the given points.
    pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
        let mut result = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(Rat::one());
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&UniPoly::linear(-xj));
                    denom *= xi - xj;
                }
            }
            result = result.add(&basis.scale(&(yi / &denom)));
        }
        result
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{int, rat};

    #[test]
    fn binomials_agree_with_counts() {
        // C(t+2, 2) at t = 3 is C(5,2) = 10
        assert_eq!(UniPoly::binomial(2, 2).eval(&int(3)), int(10));
        // as a polynomial it vanishes at t = -1, -2
        assert_eq!(UniPoly::binomial(2, 2).eval(&int(-1)), int(0));
        assert_eq!(UniPoly::binomial(0, 0), UniPoly::constant(int(1)));
        assert_eq!(UniPoly::binomial(2, 2).to_string(), "1/2 t^2 + 3/2 t + 1");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![rat(1, 3), int(-2), int(0), rat(5, 7)]);
        let pts: Vec<(Rat, Rat)> = (-2..3).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), p);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = UniPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(UniPoly::new(vec![int(0)]).degree(), None);
    }
}
