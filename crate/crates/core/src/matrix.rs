//! Exact rational matrices and the graph matrices built from `D` and `A`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{arg, Error, Result};
use crate::graph::Graph;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p` with an optional sign. Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Argument(format!("{s:?} is not an exact rational p/q"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p, q),
        None => (t, "1"),
    };
    let ok = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix(['-', '+']).unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num, true) || !ok(den, false) {
        return Err(bad());
    }
    let p: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Argument(format!("{s:?} has a zero denominator")));
    }
    Ok(Rational::new(p, q))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A square matrix over the rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return arg("matrix rows must all have length equal to the row count");
        }
        Ok(ExactMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// `self + c I`.
    pub fn shifted(&self, c: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i) + c;
            m.set(i, i, v);
        }
        m
    }

    /// `x I - self`.
    pub fn characteristic_at(&self, x: &Rational) -> Self {
        ExactMatrix::from_fn(self.n, |i, j| {
            if i == j {
                x - self.get(i, j)
            } else {
                -self.get(i, j)
            }
        })
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<Self> {
        if self.n != other.n {
            return arg("matrix orders differ");
        }
        Ok(ExactMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.n != other.n {
            return arg("matrix orders differ");
        }
        Ok(ExactMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    /// The submatrix on the given rows and columns, both in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return arg("submatrix must be square");
        }
        if rows.iter().chain(cols).any(|&i| i >= self.n) {
            return arg("submatrix index out of range");
        }
        let k = rows.len();
        Ok(ExactMatrix::from_fn(k, |a, b| {
            self.get(rows[a], cols[b]).clone()
        }))
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_zero()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({})[", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Which graph matrix to build.
///
/// `AAlpha(alpha)` is `alpha D + (1 - alpha) A`; any rational is accepted,
/// although the usual range is `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixKind {
    Degree,
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    AAlpha(Rational),
    LinComb(Rational, Rational),
}

impl MatrixKind {
    /// `(beta, gamma)` with the matrix equal to `beta D + gamma A`.
    pub fn coefficients(&self) -> (Rational, Rational) {
        match self {
            MatrixKind::Degree => (rat(1), rat(0)),
            MatrixKind::Adjacency => (rat(0), rat(1)),
            MatrixKind::Laplacian => (rat(1), rat(-1)),
            MatrixKind::SignlessLaplacian => (rat(1), rat(1)),
            MatrixKind::AAlpha(a) => (a.clone(), rat(1) - a),
            MatrixKind::LinComb(b, g) => (b.clone(), g.clone()),
        }
    }

    pub fn matrix(&self, g: &Graph) -> ExactMatrix {
        let (beta, gamma) = self.coefficients();
        lincomb_matrix(g, &beta, &gamma)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Degree => write!(f, "D"),
            MatrixKind::Adjacency => write!(f, "A"),
            MatrixKind::Laplacian => write!(f, "L"),
            MatrixKind::SignlessLaplacian => write!(f, "Q"),
            MatrixKind::AAlpha(a) => write!(f, "Aalpha:{}", format_rational(a)),
            MatrixKind::LinComb(b, g) => {
                write!(f, "lincomb:{},{}", format_rational(b), format_rational(g))
            }
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    /// Parses `D`, `A`, `L`, `Q`, `Aalpha:p/q`, `lincomb:b,g`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "D" => Ok(MatrixKind::Degree),
            "A" => Ok(MatrixKind::Adjacency),
            "L" => Ok(MatrixKind::Laplacian),
            "Q" => Ok(MatrixKind::SignlessLaplacian),
            t => {
                if let Some(a) = t.strip_prefix("Aalpha:") {
                    Ok(MatrixKind::AAlpha(parse_rational(a)?))
                } else if let Some(bg) = t.strip_prefix("lincomb:") {
                    let (b, g) = bg.split_once(',').ok_or_else(|| {
                        Error::Argument(format!("{s:?} needs lincomb:beta,gamma"))
                    })?;
                    Ok(MatrixKind::LinComb(parse_rational(b)?, parse_rational(g)?))
                } else {
                    arg(format!("unknown matrix kind {s:?}"))
                }
            }
        }
    }
}

/// `beta D(G) + gamma A(G)`.
pub fn lincomb_matrix(g: &Graph, beta: &Rational, gamma: &Rational) -> ExactMatrix {
    ExactMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            beta * rat(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            gamma.clone()
        } else {
            Rational::zero()
        }
    })
}
