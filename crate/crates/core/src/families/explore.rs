//! Exhaustive and randomized exploration of the starred families.

use std::collections::HashMap;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use super::named::build_named;
use super::script::{BuildScript, Family, ScriptError, Step};
use crate::graph::{canonical_pair, CanonicalKey, Graph, GraphError, VertexSet, CANONICAL_MAX_ORDER};

/// Every member of `family` with at most `max_n` vertices, one per
/// isomorphism class, sorted by order and then canonical key.
pub fn family_members(family: Family, max_n: usize) -> Result<Vec<Graph>, ScriptError> {
    if max_n > CANONICAL_MAX_ORDER {
        return Err(GraphError::Unsupported {
            op: "family_members",
            n: max_n,
            max: CANONICAL_MAX_ORDER,
        }
        .into());
    }
    let r = family.r();
    let mut seen: HashMap<CanonicalKey, Graph> = HashMap::new();
    let mut queue: Vec<Graph> = Vec::new();
    let push = |g: Graph, seen: &mut HashMap<CanonicalKey, Graph>, queue: &mut Vec<Graph>| -> Result<(), ScriptError> {
        let (key, canon) = canonical_pair(&g)?;
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
            e.insert(canon.clone());
            queue.push(canon);
        }
        Ok(())
    };
    for base in family.bases() {
        let g = build_named(&base)?;
        if g.n() <= max_n {
            push(g, &mut seen, &mut queue)?;
        }
    }
    let mut done: Vec<Graph> = Vec::new();
    while let Some(g) = queue.pop() {
        let n = g.n();
        let ports: Vec<usize> = (0..n).filter(|&v| g.degree(v) < r).collect();
        for (i, &u) in ports.iter().enumerate() {
            for &v in &ports[i + 1..] {
                if !g.has_edge(u, v) {
                    push(g.with_edge(u, v)?, &mut seen, &mut queue)?;
                }
            }
        }
        if n < max_n {
            for subset in subsets(&ports, r) {
                push(g.with_vertex(subset.into_iter().collect())?, &mut seen, &mut queue)?;
            }
        }
        done.push(g.clone());
        for h in &done {
            if n + h.n() <= max_n {
                push(g.disjoint_union(h)?, &mut seen, &mut queue)?;
            }
        }
    }
    let mut all: Vec<(CanonicalKey, Graph)> = seen.into_iter().collect();
    all.sort_by(|a, b| (a.1.n(), &a.0).cmp(&(b.1.n(), &b.0)));
    Ok(all.into_iter().map(|(_, g)| g).collect())
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for (i, &x) in items.iter().enumerate() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(x);
            go(&items[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, &mut Vec::new(), &mut out);
    out
}

/// Connected cubic members of F3* with at most `max_n` vertices.
pub fn catalog_f3_cubic(max_n: usize) -> Result<Vec<Graph>, ScriptError> {
    Ok(family_members(Family::F3Star, max_n)?
        .into_iter()
        .filter(|g| g.regularity() == Some(3) && g.is_connected())
        .collect())
}

/// A random valid script for `family` with at most `max_n` vertices. Steps
/// are drawn until no step fits or the walk stops early (probability
/// `1/(4 max_n)` per step), so most outputs end up regular.
pub fn random_script<R: Rng + ?Sized>(family: Family, max_n: usize, rng: &mut R) -> Result<BuildScript, ScriptError> {
    let r = family.r();
    let bases: Vec<Graph> = family
        .bases()
        .iter()
        .map(build_named)
        .collect::<Result<_, _>>()?;
    let fitting: Vec<usize> = (0..bases.len()).filter(|&i| bases[i].n() <= max_n).collect();
    let &first = fitting.choose(rng).ok_or(ScriptError::Empty)?;
    let names = family.bases();
    let mut steps = vec![Step::Base(names[first].clone())];
    let mut g = bases[first].clone();
    loop {
        if rng.random_range(0..4 * max_n.max(1)) == 0 {
            break;
        }
        let ports: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < r).collect();
        let mut moves: Vec<Step> = Vec::new();
        for (i, &u) in ports.iter().enumerate() {
            for &v in &ports[i + 1..] {
                if !g.has_edge(u, v) {
                    moves.push(Step::AddEdge(u, v));
                }
            }
        }
        if g.n() < max_n && ports.len() >= r {
            let mut pick = ports.clone();
            pick.shuffle(rng);
            pick.truncate(r);
            pick.sort_unstable();
            moves.push(Step::AddVertex(pick));
        }
        for &b in &fitting {
            // Unions only help while every port can still be closed.
            if g.n() + bases[b].n() <= max_n && rng.random_range(0..4) == 0 {
                moves.push(Step::Union(BuildScript {
                    steps: vec![Step::Base(names[b].clone())],
                }));
            }
        }
        let Some(step) = moves.choose(rng).cloned() else {
            break;
        };
        g = match &step {
            Step::AddEdge(u, v) => g.with_edge(*u, *v)?,
            Step::AddVertex(nbrs) => g.with_vertex(nbrs.iter().copied().collect::<VertexSet>())?,
            Step::Union(s) => match s.steps.as_slice() {
                [Step::Base(name)] => g.disjoint_union(&build_named(name)?)?,
                _ => unreachable!("unions are single bases here"),
            },
            Step::Base(_) => unreachable!("base only starts a script"),
        };
        steps.push(step);
    }
    Ok(BuildScript { steps })
}
