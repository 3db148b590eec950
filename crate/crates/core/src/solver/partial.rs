//! Exact partial Grundy number.
//!
//! For each candidate `k`, from `Δ+1` downwards, the search designates a
//! Grundy vertex for classes `k, k-1, .., 2` in turn and gives each one
//! neighbors of every smaller color, then tries to extend the partial
//! assignment to a proper coloring of the remaining vertices. Class 1 needs
//! no witness beyond being nonempty, which the class-2 witness guarantees.

use super::grundy::{grundy_exact_with, Context, State};
use super::{Budget, Coloring, SolveOptions, SolverError, PARTIAL_MAX_ORDER};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSolution {
    pub value: usize,
    /// A total coloring in which every class has a Grundy vertex.
    pub coloring: Coloring,
    pub nodes: u64,
}

pub fn partial_grundy_exact(g: &Graph) -> Result<usize, SolverError> {
    Ok(partial_grundy_exact_with(g, &SolveOptions::default())?.value)
}

pub fn partial_grundy_exact_with(g: &Graph, opts: &SolveOptions) -> Result<PartialSolution, SolverError> {
    let n = g.n();
    if n > PARTIAL_MAX_ORDER {
        return Err(SolverError::TooLarge {
            op: "partial_grundy_exact",
            n,
            max: PARTIAL_MAX_ORDER,
        });
    }
    // Every Grundy coloring is a partial Grundy coloring.
    let lower = grundy_exact_with(g, opts)?;
    let mut budget = Budget::new(opts.budget);
    budget.used = lower.nodes;
    if n == 0 {
        return Ok(PartialSolution {
            value: 0,
            coloring: lower.coloring,
            nodes: budget.used,
        });
    }
    let ctx = Context::new(g);
    let rows = g.rows();
    for k in (lower.value + 1..=g.max_degree() + 1).rev() {
        let mut search = Search {
            g,
            rows,
            ctx: &ctx,
            k,
            s: State::new(n, k),
            budget: &mut budget,
        };
        if search.designate(k)? {
            let colors = search.s.color.iter().map(|&c| c as usize).collect();
            return Ok(PartialSolution {
                value: k,
                coloring: Coloring::new(colors)?,
                nodes: budget.used,
            });
        }
    }
    Ok(PartialSolution {
        value: lower.value,
        coloring: lower.coloring,
        nodes: budget.used,
    })
}

struct Search<'a> {
    g: &'a Graph,
    rows: &'a [u64],
    ctx: &'a Context,
    k: usize,
    s: State,
    budget: &'a mut Budget,
}

impl Search<'_> {
    /// Chooses the Grundy vertex of class `c`, then satisfies it.
    fn designate(&mut self, c: usize) -> Result<bool, SolverError> {
        if c < 2 {
            return self.extend_coloring();
        }
        self.budget.tick()?;
        let options: Vec<usize> = if self.s.colored == 0 {
            self.ctx.roots.clone()
        } else {
            (0..self.g.n()).collect()
        };
        let mut tried_reps = 0u64;
        for v in options {
            if self.g.degree(v) + 1 < c {
                continue;
            }
            let current = self.s.color[v] as usize;
            if current == c {
                if self.satisfy(v, c)? {
                    return Ok(true);
                }
                continue;
            }
            if current != 0 || self.s.mask[v] >> c & 1 == 1 {
                continue;
            }
            let rep = self.ctx.twin_rep[v];
            if tried_reps >> rep & 1 == 1 {
                continue;
            }
            tried_reps |= 1 << rep;
            self.s.assign(self.rows, v, c);
            if self.satisfy(v, c)? {
                return Ok(true);
            }
            self.s.unassign(self.rows, v);
        }
        Ok(false)
    }

    /// Gives `v` (colored `c`) a neighbor of each smaller color, then moves on
    /// to class `c - 1`.
    fn satisfy(&mut self, v: usize, c: usize) -> Result<bool, SolverError> {
        self.budget.tick()?;
        let missing = ((1u64 << c) - 2) & !self.s.mask[v];
        let Some(j) = VertexSet(missing).first() else {
            return self.designate(c - 1);
        };
        let free = self.rows[v] & !self.s.colored;
        if missing.count_ones() > free.count_ones() {
            return Ok(false);
        }
        let mut tried_reps = 0u64;
        for u in VertexSet(free) {
            if self.s.mask[u] >> j & 1 == 1 {
                continue;
            }
            let rep = self.ctx.twin_rep[u];
            if tried_reps >> rep & 1 == 1 {
                continue;
            }
            tried_reps |= 1 << rep;
            self.s.assign(self.rows, u, j);
            if self.satisfy(v, c)? {
                return Ok(true);
            }
            self.s.unassign(self.rows, u);
        }
        Ok(false)
    }

    /// Properly colors every remaining vertex with colors `1..=k`.
    fn extend_coloring(&mut self) -> Result<bool, SolverError> {
        self.budget.tick()?;
        let palette = (1u64 << (self.k + 1)) - 2;
        let uncolored = self.g.vertices().0 & !self.s.colored;
        let Some(v) = VertexSet(uncolored).iter().min_by_key(|&v| (palette & !self.s.mask[v]).count_ones())
        else {
            return Ok(true);
        };
        for c in VertexSet(palette & !self.s.mask[v]) {
            self.s.assign(self.rows, v, c);
            if self.extend_coloring()? {
                return Ok(true);
            }
            self.s.unassign(self.rows, v);
        }
        Ok(false)
    }
}
