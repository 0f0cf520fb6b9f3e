use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::rational::{format_rational, parse_rational, Rational};
use crate::PolyError;

/// An ordered list of distinct variable names. Every variable has
/// cohomological degree 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ctx, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(PolyError::Context("empty variable name".into()));
            }
            if names[..i].contains(a) {
                return Err(PolyError::Context(format!("duplicate variable name {a:?}")));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// `prefix1, …, prefixn`, optionally followed by `t`.
    pub fn indexed(prefix: &str, n: usize, with_t: bool) -> Ctx {
        let mut names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        if with_t {
            names.push("t".into());
        }
        Arc::new(VariableContext { names })
    }

    /// `t1, …, tn`.
    pub fn torus(n: usize) -> Ctx {
        Self::indexed("t", n, false)
    }

    /// The single variable `t`.
    pub fn circle() -> Ctx {
        Self::indexed("t", 0, true)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Ctx,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        Self::monomial(ctx, vec![0; ctx.len()], c)
    }

    pub fn monomial(ctx: &Ctx, exp: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exp.len(), ctx.len(), "exponent length does not match context");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        let mut exp = vec![0; ctx.len()];
        exp[i] = 1;
        Self::monomial(ctx, exp, Rational::one())
    }

    pub fn var_named(ctx: &Ctx, name: &str) -> Result<Self, PolyError> {
        let i = ctx
            .index(name)
            .ok_or_else(|| PolyError::Context(format!("no variable named {name:?}")))?;
        Ok(Self::var(ctx, i))
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, merging
    /// repeated exponents.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Self {
        let mut p = Self::zero(ctx);
        for (c, e) in terms {
            assert_eq!(e.len(), ctx.len(), "exponent length does not match context");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.ctx.len()])
    }

    /// Largest total exponent of a term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has total exponent `d`. The zero
    /// polynomial is reported as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    /// Cohomological degree of a homogeneous polynomial (twice the
    /// polynomial degree).
    pub fn cohomological_degree(&self) -> Option<u32> {
        self.homogeneous_degree().map(|d| 2 * d)
    }

    fn check_ctx(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.ctx.names().join(","),
                right: other.ctx.names().join(","),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images must share one
    /// target context.
    pub fn substitute(&self, target: &Ctx, images: &[Polynomial]) -> Result<Self, PolyError> {
        if images.len() != self.ctx.len() {
            return Err(PolyError::Context(format!(
                "substitution has {} images for {} variables",
                images.len(),
                self.ctx.len()
            )));
        }
        let probe = Self::zero(target);
        for im in images {
            probe.check_ctx(im)?;
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = powers.entry((i, k)).or_insert_with(|| images[i].pow(k));
                term = &term * p;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitution by variable name. Unmapped variables are sent to the
    /// variable of the same name in `target`.
    pub fn substitute_named(
        &self,
        target: &Ctx,
        map: &HashMap<String, Polynomial>,
    ) -> Result<Self, PolyError> {
        let images = self
            .ctx
            .names()
            .iter()
            .map(|name| match map.get(name) {
                Some(p) => Ok(p.clone()),
                None => Polynomial::var_named(target, name),
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.substitute(target, &images)
    }

    /// Re-expresses the polynomial in a context containing all of its
    /// variables (matched by name).
    pub fn embed(&self, target: &Ctx) -> Result<Self, PolyError> {
        let idx = self
            .ctx
            .names()
            .iter()
            .map(|n| {
                target
                    .index(n)
                    .ok_or_else(|| PolyError::Context(format!("variable {n:?} missing from target")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[idx[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at a rational point, one value per variable.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ctx.len());
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// The specialization sending each `t_i` (a variable named `t<i>`) to
    /// `i·t`. Other variables pass through unchanged; `t` is appended to
    /// the context if absent.
    pub fn specialize_pi(&self) -> Self {
        let is_ti = |name: &str| -> Option<u32> {
            let rest = name.strip_prefix('t')?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            rest.parse().ok()
        };
        let mut names: Vec<String> = self
            .ctx
            .names()
            .iter()
            .filter(|n| is_ti(n).is_none())
            .cloned()
            .collect();
        if !names.iter().any(|n| n == "t") {
            names.push("t".into());
        }
        let target = VariableContext::new(names).expect("names stay distinct");
        let t = Polynomial::var_named(&target, "t").expect("t present");
        let images: Vec<Polynomial> = self
            .ctx
            .names()
            .iter()
            .map(|n| match is_ti(n) {
                Some(i) => t.scale(&Rational::from_integer(i.into())),
                None => Polynomial::var_named(&target, n).expect("kept variable"),
            })
            .collect();
        self.substitute(&target, &images).expect("images live in target")
    }

    /// Terms in display order: higher degree first, then lexicographic
    /// with the last variable of the context most significant.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| display_order(a, b));
        v
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| json!({"coeff": format_rational(c), "exp": e}))
            .collect();
        json!({"vars": self.ctx.names(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, PolyError> {
        let bad = |m: &str| PolyError::Parse(format!("polynomial JSON: {m}"));
        let vars = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"vars\""))?;
        let names = vars
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("non-string var")))
            .collect::<Result<Vec<_>, _>>()?;
        let ctx = VariableContext::new(names)?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\""))?;
        let mut p = Polynomial::zero(&ctx);
        for t in terms {
            let c = t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing coeff"))?;
            let e = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exp"))?
                .iter()
                .map(|x| x.as_u64().map(|k| k as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<Vec<_>, _>>()?;
            if e.len() != ctx.len() {
                return Err(bad("exponent length does not match vars"));
            }
            p.add_term(e, parse_rational(c)?);
        }
        Ok(p)
    }
}

fn display_order(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.iter().rev().cmp(a.iter().rev()))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.ctx.name(i).to_string()
                    } else {
                        format!("{}^{}", self.ctx.name(i), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        self.try_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        self.try_sub(rhs).expect("polynomial context mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        self.try_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `e_i` in the given variables (indices into `ctx`).
pub fn elementary_symmetric(i: usize, ctx: &Ctx, vars: &[usize]) -> Result<Polynomial, PolyError> {
    if i == 0 || i > vars.len() {
        return Err(PolyError::OutOfRange(format!(
            "e_{i} needs 1 <= i <= {} (number of variables)",
            vars.len()
        )));
    }
    let mut out = Polynomial::zero(ctx);
    let mut chosen = Vec::with_capacity(i);
    fn rec(start: usize, i: usize, vars: &[usize], chosen: &mut Vec<usize>, ctx: &Ctx, out: &mut Polynomial) {
        if chosen.len() == i {
            let mut e = vec![0; ctx.len()];
            for &v in chosen.iter() {
                e[v] += 1;
            }
            out.add_term(e, Rational::one());
            return;
        }
        for k in start..vars.len() {
            chosen.push(vars[k]);
            rec(k + 1, i, vars, chosen, ctx, out);
            chosen.pop();
        }
    }
    rec(0, i, vars, &mut chosen, ctx, &mut out);
    Ok(out)
}

/// `e_i` evaluated at arbitrary polynomials (used for `e_i(i·t)` style
/// specializations).
pub fn elementary_symmetric_of(i: usize, values: &[Polynomial], ctx: &Ctx) -> Polynomial {
    // e_k of the first m values, updated one value at a time
    let mut e: Vec<Polynomial> = vec![Polynomial::one(ctx)];
    e.extend((0..i).map(|_| Polynomial::zero(ctx)));
    for v in values {
        for k in (1..=i).rev() {
            e[k] = &e[k] + &(&e[k - 1] * v);
        }
    }
    e.swap_remove(i)
}
