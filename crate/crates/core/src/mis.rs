//! Exact maximum independent sets and independence polynomials.

use std::collections::HashMap;
use std::rc::Rc;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::treedp;

/// Cap on the number of search nodes. Shared by everything that runs under
/// it, including concurrent per-vertex checks.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: AtomicU64::new(0) }
    }

    pub fn nodes(limit: u64) -> Self {
        Budget { limit: Some(limit), used: AtomicU64::new(0) }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub(crate) fn tick(&self) -> Result<()> {
        self.charge(1)
    }

    pub(crate) fn charge(&self, nodes: u64) -> Result<()> {
        let used = self.used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        match self.limit {
            Some(l) if used > l => Err(Error::BudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MisResult {
    pub alpha: usize,
    #[serde(serialize_with = "crate::serialize_set")]
    pub witness: VertexSet,
}

/// How [`Solver`] searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Dynamic programming along an elimination order (min-fill or
    /// min-degree, whichever is narrower) when its width is at most
    /// [`AUTO_WIDTH`], branch and bound otherwise.
    #[default]
    Auto,
    BranchAndBound,
    /// Elimination-order dynamic programming regardless of width.
    TreeDp,
}

pub const AUTO_WIDTH: usize = 18;

/// Exact searcher over subsets of one graph.
pub struct Solver<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    strategy: Strategy,
    order: OnceLock<Option<treedp::Elimination>>,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a Graph, budget: &'a Budget) -> Self {
        Solver { g, budget, strategy: Strategy::Auto, order: OnceLock::new() }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self.order = OnceLock::new();
        self
    }

    fn exact(&self, within: &VertexSet, goal: usize) -> Result<VertexSet> {
        let width = match self.strategy {
            Strategy::BranchAndBound => None,
            Strategy::Auto => Some(AUTO_WIDTH),
            Strategy::TreeDp => Some(usize::MAX),
        };
        if let Some(elim) = width.and_then(|w| self.elimination(within, w)) {
            return treedp::solve(self.g, &elim, self.budget);
        }
        Ok(self.search(within.clone(), -1, goal)?.expect("the empty set beats -1"))
    }

    /// Elimination order for `G[within]` of width at most `max_width`. One
    /// order is computed for the whole graph and restricted to each query.
    fn elimination(&self, within: &VertexSet, max_width: usize) -> Option<treedp::Elimination> {
        let global = self.order.get_or_init(|| {
            let all = self.g.vertex_set();
            let fill = treedp::min_fill_order(self.g, &all, max_width);
            let deg = treedp::min_degree_order(self.g, &all, max_width);
            match (fill, deg) {
                (Some(a), Some(b)) => Some(if b.width() < a.width() { b } else { a }),
                (a, b) => a.or(b),
            }
        });
        match global {
            Some(e) => Some(e.restrict(self.g, within)),
            None => treedp::min_degree_order(self.g, within, max_width),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Maximum independent set of `G[within]`.
    pub fn max_within(&self, within: &VertexSet) -> Result<VertexSet> {
        self.g.check_set(within)?;
        self.exact(within, usize::MAX)
    }

    /// Some independent set of `G[within]` of size at least `goal`, if any.
    /// When none exists the maximum one is returned, so the caller can read
    /// off the best size.
    pub fn reach_within(&self, within: &VertexSet, goal: usize) -> Result<VertexSet> {
        self.g.check_set(within)?;
        if goal == 0 {
            return Ok(VertexSet::new(self.g.n()));
        }
        self.exact(within, goal)
    }

    pub fn max_independent_set(&self) -> Result<MisResult> {
        let w = self.max_within(&self.g.vertex_set())?;
        Ok(MisResult { alpha: w.len(), witness: w })
    }

    /// Independent set of size exactly `k` containing `v`, if one exists.
    /// For `k = 0` the answer is vacuously yes and the witness is `{v}`.
    pub fn has_k_is_containing(&self, v: usize, k: usize) -> Result<Option<VertexSet>> {
        self.g.check_vertex(v)?;
        let rest = self.g.vertex_set().difference(&self.g.closed_neighborhood(v));
        let mut s = self.reach_within(&rest, k.saturating_sub(1))?;
        if s.len() + 1 < k {
            return Ok(None);
        }
        while s.len() + 1 > k.max(1) {
            let last = s.iter().last().expect("nonempty");
            s.remove(last);
        }
        s.insert(v);
        Ok(Some(s))
    }

    fn reduce(&self, cand: &mut VertexSet, taken: &mut VertexSet) {
        'outer: loop {
            for v in cand.iter() {
                let nb = self.g.neighbors(v).intersection(cand);
                let simplicial = match nb.len() {
                    0 | 1 => true,
                    2 => {
                        let mut it = nb.iter();
                        let (a, b) = (it.next().unwrap(), it.next().unwrap());
                        self.g.has_edge(a, b)
                    }
                    _ => false,
                };
                if simplicial {
                    taken.insert(v);
                    cand.difference_with(&nb);
                    cand.remove(v);
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// Greedy clique cover of `G[cand]`; its size bounds α from above.
    fn clique_cover(&self, cand: &VertexSet) -> usize {
        let mut commons: Vec<VertexSet> = Vec::new();
        for v in cand {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(self.g.neighbors(v)),
                None => commons.push(self.g.neighbors(v).intersection(cand)),
            }
        }
        commons.len()
    }

    /// Best independent set of `G[cand]` with more than `lb` vertices, or
    /// `None`. Stops at the first set reaching `goal`.
    fn search(&self, mut cand: VertexSet, lb: isize, goal: usize) -> Result<Option<VertexSet>> {
        self.budget.tick()?;
        let mut taken = VertexSet::new(self.g.n());
        self.reduce(&mut cand, &mut taken);
        let t = taken.len();
        let lb = lb - t as isize;
        let goal = goal.saturating_sub(t);
        if cand.is_empty() || goal == 0 {
            return Ok((lb < 0).then_some(taken));
        }
        let comps = self.g.components_within(&cand);
        if comps.len() > 1 {
            let ubs: Vec<usize> = comps.iter().map(|c| self.clique_cover(c)).collect();
            let mut rest: usize = ubs.iter().sum();
            if rest as isize <= lb {
                return Ok(None);
            }
            let mut acc = 0usize;
            for (c, ub) in comps.into_iter().zip(ubs) {
                rest -= ub;
                let need = (lb - acc as isize - rest as isize).max(-1);
                let Some(s) = self.search(c, need, goal - acc)? else {
                    return Ok(None);
                };
                acc += s.len();
                taken.union_with(&s);
                if acc >= goal {
                    break;
                }
            }
            return Ok((acc as isize > lb).then_some(taken));
        }
        if self.clique_cover(&cand) as isize <= lb {
            return Ok(None);
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("nonempty");
        let mut best = None;
        let mut lb = lb;
        let with = cand.difference(&self.g.closed_neighborhood(v));
        if let Some(mut s) = self.search(with, lb - 1, goal - 1)? {
            s.insert(v);
            lb = s.len() as isize;
            let done = s.len() >= goal;
            best = Some(s);
            if done {
                taken.union_with(best.as_ref().unwrap());
                return Ok(Some(taken));
            }
        }
        cand.remove(v);
        if let Some(s) = self.search(cand, lb, goal)? {
            best = Some(s);
        }
        Ok(best.map(|b| b.union(&taken)))
    }
}

pub fn max_independent_set(g: &Graph) -> Result<MisResult> {
    Solver::new(g, &Budget::unlimited()).max_independent_set()
}

pub fn alpha(g: &Graph) -> Result<usize> {
    Ok(max_independent_set(g)?.alpha)
}

pub fn has_k_is_containing(g: &Graph, v: usize, k: usize) -> Result<Option<VertexSet>> {
    Solver::new(g, &Budget::unlimited()).has_k_is_containing(v, k)
}

/// Coefficients `N_0..N_α`, where `N_s` counts independent sets of size `s`
/// (the empty set included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependencePolynomial {
    coefficients: Vec<BigUint>,
}

impl IndependencePolynomial {
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, s: usize) -> BigUint {
        self.coefficients.get(s).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &BigUint {
        self.coefficients.last().expect("N_0 always present")
    }

    /// Number of independent sets.
    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone().into());
        }
        acc
    }

    pub fn mul(&self, other: &IndependencePolynomial) -> IndependencePolynomial {
        IndependencePolynomial { coefficients: poly_mul(&self.coefficients, &other.coefficients) }
    }
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Memoizing evaluator of `I(G[S])` for subsets `S`. The memo lives as long
/// as the engine, so repeated queries on one graph share work.
pub struct PolyEngine<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    memo: HashMap<VertexSet, Rc<Vec<BigUint>>>,
}

impl<'a> PolyEngine<'a> {
    pub fn new(g: &'a Graph, budget: &'a Budget) -> Self {
        PolyEngine { g, budget, memo: HashMap::new() }
    }

    pub fn polynomial_within(&mut self, within: &VertexSet) -> Result<IndependencePolynomial> {
        self.g.check_set(within)?;
        let c = self.poly(within)?;
        Ok(IndependencePolynomial { coefficients: c.as_ref().clone() })
    }

    pub fn polynomial(&mut self) -> Result<IndependencePolynomial> {
        self.polynomial_within(&self.g.vertex_set())
    }

    /// Polynomial of `G - N[v]`.
    pub fn polynomial_without_closed(&mut self, v: usize) -> Result<IndependencePolynomial> {
        self.g.check_vertex(v)?;
        let rest = self.g.vertex_set().difference(&self.g.closed_neighborhood(v));
        self.polynomial_within(&rest)
    }

    fn poly(&mut self, cand: &VertexSet) -> Result<Rc<Vec<BigUint>>> {
        match cand.len() {
            0 => return Ok(Rc::new(vec![BigUint::one()])),
            1 => return Ok(Rc::new(vec![BigUint::one(), BigUint::one()])),
            _ => {}
        }
        if let Some(p) = self.memo.get(cand) {
            return Ok(p.clone());
        }
        self.budget.tick()?;
        let comps = self.g.components_within(cand);
        let result = if comps.len() > 1 {
            let mut acc = vec![BigUint::one()];
            for c in &comps {
                acc = poly_mul(&acc, &self.poly(c)?);
            }
            acc
        } else {
            let v = cand
                .iter()
                .max_by_key(|&v| (self.g.neighbors(v).intersection_len(cand), std::cmp::Reverse(v)))
                .expect("nonempty");
            let mut minus = cand.clone();
            minus.remove(v);
            let without = self.poly(&minus)?;
            let closed = self.poly(&cand.difference(&self.g.closed_neighborhood(v)))?;
            let mut out = vec![BigUint::zero(); without.len().max(closed.len() + 1)];
            for (i, c) in without.iter().enumerate() {
                out[i] += c;
            }
            for (i, c) in closed.iter().enumerate() {
                out[i + 1] += c;
            }
            out
        };
        let rc = Rc::new(result);
        self.memo.insert(cand.clone(), rc.clone());
        Ok(rc)
    }
}

pub fn independence_polynomial(g: &Graph) -> Result<IndependencePolynomial> {
    PolyEngine::new(g, &Budget::unlimited()).polynomial()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisCounts {
    /// Number of maximum independent sets.
    pub total: BigUint,
    /// Number of maximum independent sets containing the queried vertex.
    pub containing: Option<BigUint>,
}

pub fn mis_counts_with(engine: &mut PolyEngine<'_>, v: Option<usize>) -> Result<MisCounts> {
    let p = engine.polynomial()?;
    let alpha = p.degree();
    let containing = match v {
        None => None,
        Some(v) => {
            let q = engine.polynomial_without_closed(v)?;
            Some(if q.degree() + 1 == alpha { q.leading().clone() } else { BigUint::zero() })
        }
    };
    Ok(MisCounts { total: p.leading().clone(), containing })
}

pub fn mis_counts(g: &Graph, v: Option<usize>) -> Result<MisCounts> {
    mis_counts_with(&mut PolyEngine::new(g, &Budget::unlimited()), v)
}
