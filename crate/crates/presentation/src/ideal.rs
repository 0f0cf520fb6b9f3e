use std::collections::BTreeMap;
use std::fmt;

use hessenberg::HessenbergFunction;
use polyring::{elementary_symmetric, elementary_symmetric_of, ratio, Ctx, Polynomial, Rational, VariableContext};

use crate::PresentationError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    FlagRelations,
    PetersonQuadratics,
    HessenbergF,
    UserSupplied,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::FlagRelations => "flag relations",
            Provenance::PetersonQuadratics => "Peterson quadratics",
            Provenance::HessenbergF => "f_{h(j),j}",
            Provenance::UserSupplied => "user-supplied",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A homogeneous ideal given by generators.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ctx: Ctx,
    generators: Vec<Polynomial>,
    degrees: Vec<u32>,
    provenance: Provenance,
}

impl IdealPresentation {
    /// Every generator must be nonzero and homogeneous of positive degree.
    pub fn new(ctx: Ctx, generators: Vec<Polynomial>, provenance: Provenance) -> Result<Self, PresentationError> {
        let mut degrees = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.context().names() != ctx.names() {
                return Err(PresentationError::Context(g.context().names().join(",")));
            }
            match g.homogeneous_degree() {
                Some(d) if d > 0 && !g.is_zero() => degrees.push(d),
                _ => return Err(PresentationError::NotHomogeneous(g.to_string())),
            }
        }
        Ok(IdealPresentation { ctx, generators, degrees, provenance })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Polynomial degrees of the generators.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The same ideal with generators listed in another order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        IdealPresentation {
            ctx: self.ctx.clone(),
            generators: order.iter().map(|&k| self.generators[k].clone()).collect(),
            degrees: order.iter().map(|&k| self.degrees[k]).collect(),
            provenance: self.provenance,
        }
    }
}

/// `x1, …, xn` followed by `t` when `with_t`.
pub fn x_context(n: usize, with_t: bool) -> Ctx {
    VariableContext::indexed("x", n, with_t)
}

fn t_var(ctx: &Ctx, n: usize, with_t: bool) -> Polynomial {
    if with_t {
        Polynomial::var(ctx, n)
    } else {
        Polynomial::zero(ctx)
    }
}

/// `g_j = Σ_{k ≤ j} (x_k − k·t)`; `g_0 = 0`.
pub fn g(j: usize, n: usize, with_t: bool) -> Result<Polynomial, PresentationError> {
    if j > n {
        return Err(PresentationError::OutOfRange(format!("g_{j} with n={n}")));
    }
    let ctx = x_context(n, with_t);
    let t = t_var(&ctx, n, with_t);
    let mut p = Polynomial::zero(&ctx);
    for k in 1..=j {
        p = &p + &(&Polynomial::var(&ctx, k - 1) - &t.scale(&Rational::from_integer(k.into())));
    }
    Ok(p)
}

/// All `f_{i,j}`, `1 ≤ j ≤ i ≤ n`, from
/// `f_{j,j} = g_j` and `f_{i,j} = f_{i−1,j−1} + (x_j − x_i − t) f_{i−1,j}`.
pub fn f_table(n: usize, with_t: bool) -> BTreeMap<(usize, usize), Polynomial> {
    let ctx = x_context(n, with_t);
    let t = t_var(&ctx, n, with_t);
    let x = |k: usize| Polynomial::var(&ctx, k - 1);
    let mut table: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=i {
            let p = if i == j {
                g(j, n, with_t).expect("j <= n")
            } else {
                let left = table.get(&(i - 1, j - 1)).cloned().unwrap_or_else(|| Polynomial::zero(&ctx));
                let factor = &(&x(j) - &x(i)) - &t;
                &left + &(&factor * &table[&(i - 1, j)])
            };
            table.insert((i, j), p);
        }
    }
    table
}

pub fn f_ij(i: usize, j: usize, n: usize, with_t: bool) -> Result<Polynomial, PresentationError> {
    if j == 0 || j > i || i > n {
        return Err(PresentationError::OutOfRange(format!("f_{{{i},{j}}} needs 1 <= j <= i <= n={n}")));
    }
    Ok(f_table(n, with_t).remove(&(i, j)).expect("in table"))
}

/// `(f_{h(1),1}, …, f_{h(n),n})`, or the `t = 0` versions.
pub fn ideal_for(h: &HessenbergFunction, with_t: bool) -> IdealPresentation {
    let n = h.n();
    let mut table = f_table(n, with_t);
    let gens = (1..=n).map(|j| table.remove(&(h.get(j), j)).expect("h(j) >= j")).collect();
    IdealPresentation::new(x_context(n, with_t), gens, Provenance::HessenbergF).expect("f_{i,j} are homogeneous")
}

/// `(e_i(x) − e_i(t, 2t, …, nt))_{i ≤ n}`, or `(e_i(x))` when `t = 0`.
pub fn flag_ideal(n: usize, with_t: bool) -> IdealPresentation {
    let ctx = x_context(n, with_t);
    let t = t_var(&ctx, n, with_t);
    let xs: Vec<usize> = (0..n).collect();
    let multiples: Vec<Polynomial> = (1..=n).map(|k| t.scale(&Rational::from_integer(k.into()))).collect();
    let gens = (1..=n)
        .map(|i| {
            let ex = elementary_symmetric(i, &ctx, &xs).expect("i <= n");
            &ex - &elementary_symmetric_of(i, &multiples, &ctx)
        })
        .collect();
    IdealPresentation::new(ctx, gens, Provenance::FlagRelations).expect("homogeneous")
}

/// `g_k(x_k − x_{k+1} − t)` for `k < n`, and `g_n`.
pub fn peterson_x_ideal(n: usize, with_t: bool) -> IdealPresentation {
    let ctx = x_context(n, with_t);
    let t = t_var(&ctx, n, with_t);
    let mut gens: Vec<Polynomial> = (1..n)
        .map(|k| {
            let factor = &(&Polynomial::var(&ctx, k - 1) - &Polynomial::var(&ctx, k)) - &t;
            &g(k, n, with_t).expect("k <= n") * &factor
        })
        .collect();
    gens.push(g(n, n, with_t).expect("n <= n"));
    IdealPresentation::new(ctx, gens, Provenance::PetersonQuadratics).expect("homogeneous")
}

/// `z_k(z_k − ½z_{k−1} − ½z_{k+1} − t)` with `z_0 = z_n = 0`, as
/// polynomials in the given images of `z_1, …, z_{n−1}` and `t`.
fn peterson_quadratics(z: &[Polynomial], t: &Polynomial) -> Vec<Polynomial> {
    let m = z.len();
    let zero = Polynomial::zero(t.context());
    let half = ratio(1, 2);
    (0..m)
        .map(|k| {
            let prev = if k > 0 { &z[k - 1] } else { &zero };
            let next = if k + 1 < m { &z[k + 1] } else { &zero };
            let inner = &(&(&z[k] - &prev.scale(&half)) - &next.scale(&half)) - t;
            &z[k] * &inner
        })
        .collect()
}

/// The quadratics in `ℚ[z_1, …, z_{n−1}(, t)]`.
pub fn peterson_z_ideal(n: usize, with_t: bool) -> IdealPresentation {
    let ctx = VariableContext::indexed("z", n - 1, with_t);
    let t = t_var(&ctx, n - 1, with_t);
    let z: Vec<Polynomial> = (0..n - 1).map(|k| Polynomial::var(&ctx, k)).collect();
    IdealPresentation::new(ctx.clone(), peterson_quadratics(&z, &t), Provenance::PetersonQuadratics)
        .expect("homogeneous")
}

/// The quadratics rewritten through `z_k = g_k`, together with `g_n`.
pub fn peterson_quadratics_in_x(n: usize, with_t: bool) -> IdealPresentation {
    let ctx = x_context(n, with_t);
    let t = t_var(&ctx, n, with_t);
    let z: Vec<Polynomial> = (1..n).map(|k| g(k, n, with_t).expect("k <= n")).collect();
    let mut gens = peterson_quadratics(&z, &t);
    gens.push(g(n, n, with_t).expect("n <= n"));
    IdealPresentation::new(ctx, gens, Provenance::PetersonQuadratics).expect("homogeneous")
}
