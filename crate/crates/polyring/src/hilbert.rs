use std::fmt;

/// A polynomial in `q²`, optionally divided by `(1 − q²)^d`.
///
/// `coeffs[k]` is the coefficient of `q^{2k}`; exponents are reported in
/// the cohomological convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesPoly {
    coeffs: Vec<i64>,
    denominator: u32,
}

impl HilbertSeriesPoly {
    pub fn new(coeffs: Vec<i64>, denominator: u32) -> Self {
        let mut s = HilbertSeriesPoly { coeffs, denominator };
        s.trim();
        s
    }

    pub fn one() -> Self {
        Self::new(vec![1], 0)
    }

    /// `1 + q² + ⋯ + q^{2m}`.
    pub fn q_integer(m: usize) -> Self {
        Self::new(vec![1; m + 1], 0)
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && *self.coeffs.last().unwrap() == 0 {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(0);
        }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.denominator
    }

    /// Highest cohomological degree with a nonzero numerator coefficient.
    pub fn top_degree(&self) -> usize {
        2 * (self.coeffs.len() - 1)
    }

    /// Value at `q = 1` of the numerator.
    pub fn numerator_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c, self.denominator + other.denominator)
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a HilbertSeriesPoly>) -> Self {
        items.into_iter().fold(Self::one(), |acc, s| acc.mul(s))
    }

    /// Series coefficients of `q^0, q^2, …, q^{2·len−2}` after expanding
    /// the denominator.
    pub fn expand(&self, len: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..len).map(|k| self.coeffs.get(k).copied().unwrap_or(0)).collect();
        for _ in 0..self.denominator {
            for k in 1..len {
                c[k] += c[k - 1];
            }
        }
        c
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for HilbertSeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 && !(k == 0 && self.coeffs.len() == 1) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a == 1 => write!(f, "q^{}", 2 * k)?,
                _ => write!(f, "{a}q^{}", 2 * k)?,
            }
        }
        if self.denominator > 0 {
            write!(f, " / (1 - q^2)")?;
            if self.denominator > 1 {
                write!(f, "^{}", self.denominator)?;
            }
        }
        Ok(())
    }
}
