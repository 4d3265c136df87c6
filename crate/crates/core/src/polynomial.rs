//! Dense rational polynomials and immanantal polynomials.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{arg, Result};
use crate::matrix::{format_rational, Rational};
use crate::partition::Partition;

/// `sum_j coeffs[j] x^j`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `prod (x - root)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Polynomial::new(vec![Rational::one()]), |p, r| {
                p.mul(&Polynomial::new(vec![-r.clone(), Rational::one()]))
            })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get =
            |p: &Polynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Polynomial::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Synthetic division by `x - x0`: quotient and remainder.
    pub fn divide_linear(&self, x0: &Rational) -> (Polynomial, Rational) {
        if self.is_zero() {
            return (Polynomial::default(), Rational::zero());
        }
        let mut quotient = vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for j in (0..self.coeffs.len()).rev() {
            carry = &carry * x0 + &self.coeffs[j];
            if j > 0 {
                quotient[j - 1] = carry.clone();
            }
        }
        (Polynomial::new(quotient), carry)
    }

    /// `q(x) = p(x - c)`.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        // Horner in the basis of powers of (x - c)
        let lin = Polynomial::new(vec![-c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::default(), |acc, a| {
                acc.mul(&lin).add(&Polynomial::new(vec![a.clone()]))
            })
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given values.
    pub fn interpolate(points: &[Rational], values: &[Rational]) -> Result<Polynomial> {
        if points.len() != values.len() {
            return arg("interpolation needs as many values as points");
        }
        let mut total = Polynomial::default();
        for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
            let mut basis = Polynomial::new(vec![Rational::one()]);
            let mut denom = Rational::one();
            for (j, xj) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return arg("interpolation points must be distinct");
                }
                basis = basis.mul(&Polynomial::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
            total = total.add(&basis.scale(&(yi / denom)));
        }
        Ok(total)
    }
}

/// How often `x0` divides a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum RootMultiplicity {
    Finite(usize),
    /// Every point is a root; counts as `order + 1`.
    ZeroPolynomial,
}

impl RootMultiplicity {
    /// The multiplicity, with the zero polynomial mapped to `order + 1`.
    pub fn count(self, order: usize) -> usize {
        match self {
            RootMultiplicity::Finite(t) => t,
            RootMultiplicity::ZeroPolynomial => order + 1,
        }
    }
}

/// Largest `t` with `(x - x0)^t` dividing `p`.
pub fn polynomial_root_multiplicity(p: &Polynomial, x0: &Rational) -> RootMultiplicity {
    if p.is_zero() {
        return RootMultiplicity::ZeroPolynomial;
    }
    let mut t = 0;
    let mut q = p.clone();
    loop {
        let (next, rem) = q.divide_linear(x0);
        if !rem.is_zero() {
            return RootMultiplicity::Finite(t);
        }
        t += 1;
        q = next;
    }
}

/// `Imm_lambda(xI - M) = sum_r (-1)^r c_r x^{n-r}` stored as the unsigned
/// coefficients `c_0..c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmPolynomial {
    lambda: Partition,
    coeffs: Vec<Rational>,
}

impl ImmPolynomial {
    pub fn new(lambda: Partition, coeffs: Vec<Rational>) -> Self {
        ImmPolynomial { lambda, coeffs }
    }

    /// Reads the signed coefficients off a polynomial in `x` of degree at
    /// most `n`.
    pub fn from_polynomial(lambda: Partition, p: &Polynomial, n: usize) -> Self {
        let a = |j: usize| p.coeffs().get(j).cloned().unwrap_or_else(Rational::zero);
        let coeffs = (0..=n)
            .map(|r| if r % 2 == 0 { a(n - r) } else { -a(n - r) })
            .collect();
        ImmPolynomial { lambda, coeffs }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, r: usize) -> &Rational {
        &self.coeffs[r]
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.order();
        Polynomial::new(
            (0..=n)
                .map(|j| {
                    let r = n - j;
                    if r.is_multiple_of(2) {
                        self.coeffs[r].clone()
                    } else {
                        -self.coeffs[r].clone()
                    }
                })
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.to_polynomial().evaluate(x)
    }
}

impl Serialize for ImmPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ImmPolynomial", 2)?;
        st.serialize_field("partition", &self.lambda)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        st.serialize_field("coefficients", &coeffs)?;
        st.end()
    }
}

/// Multiplicity of `x0` as a root of `Imm_lambda(xI - M)`.
pub fn root_multiplicity(p: &ImmPolynomial, x0: &Rational) -> RootMultiplicity {
    polynomial_root_multiplicity(&p.to_polynomial(), x0)
}
