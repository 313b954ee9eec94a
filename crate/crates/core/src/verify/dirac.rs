use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::Vec2;
use crate::matroid::Matroid;

/// Degree of `v` in the graph on `E(M)` joining `x, y` when `x + y ∈ E(M)`.
/// Equals `|E(M_v)|`.
pub fn auxiliary_degree(m: &Matroid, v: Vec2) -> u64 {
    m.edges().translate_overlap(v)
}

/// Disjoint pairs whose sums lie in `E(M)`, with one leftover when
/// `|M|` is odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub pairs: Vec<(Vec2, Vec2)>,
    pub leftover: Option<Vec2>,
    /// Hamiltonian cycle the pairs were read from.
    pub cycle: Vec<Vec2>,
}

fn check_dirac(m: &Matroid) -> Result<()> {
    let n = m.size();
    for v in m.edges().iter() {
        let d = auxiliary_degree(m, v);
        if 2 * d <= n {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree {d}, need more than {n}/2"
            )));
        }
    }
    Ok(())
}

/// Rotation–extension construction of a Hamiltonian cycle in the
/// auxiliary graph, which must satisfy the Dirac degree condition.
pub fn hamiltonian_cycle(m: &Matroid) -> Result<Vec<Vec2>> {
    check_dirac(m)?;
    let verts: Vec<Vec2> = m.edges().iter().collect();
    let adj = |x: Vec2, y: Vec2| m.contains_edge(x ^ y);
    let mut on_path = vec![false; 1 << m.rank()];
    let mut path: VecDeque<Vec2> = VecDeque::from([verts[0]]);
    on_path[verts[0] as usize] = true;
    loop {
        // extension
        loop {
            let tail = *path.back().expect("nonempty");
            if let Some(&w) = verts.iter().find(|&&w| !on_path[w as usize] && adj(tail, w)) {
                path.push_back(w);
                on_path[w as usize] = true;
                continue;
            }
            let head = *path.front().expect("nonempty");
            if let Some(&w) = verts.iter().find(|&&w| !on_path[w as usize] && adj(head, w)) {
                path.push_front(w);
                on_path[w as usize] = true;
                continue;
            }
            break;
        }
        // rotation into a cycle
        let p: Vec<Vec2> = path.iter().copied().collect();
        let k = p.len() - 1;
        let cycle = if adj(p[0], p[k]) {
            p
        } else {
            let i = (0..k)
                .find(|&i| adj(p[i], p[k]) && adj(p[0], p[i + 1]))
                .expect("Dirac condition forces a crossing pair");
            let mut c = p[..=i].to_vec();
            c.extend(p[i + 1..].iter().rev());
            c
        };
        if cycle.len() == verts.len() {
            return Ok(cycle);
        }
        // open the cycle at the first vertex with an outside neighbour
        let (j, w) = cycle
            .iter()
            .enumerate()
            .find_map(|(j, &x)| verts.iter().find(|&&w| !on_path[w as usize] && adj(x, w)).map(|&w| (j, w)))
            .expect("Dirac graphs are connected");
        path = VecDeque::with_capacity(cycle.len() + 1);
        path.push_back(w);
        path.extend(cycle[j..].iter().chain(cycle[..j].iter()));
        on_path[w as usize] = true;
    }
}

/// Pairs alternate edges of a Hamiltonian cycle of the auxiliary graph.
pub fn dirac_pairing(m: &Matroid) -> Result<Pairing> {
    let cycle = hamiltonian_cycle(m)?;
    let pairs = cycle.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let leftover = (cycle.len() % 2 == 1).then(|| *cycle.last().expect("nonempty"));
    Ok(Pairing { pairs, leftover, cycle })
}

/// Checks a pairing directly: disjoint, covering, sums inside `E(M)`.
pub fn validate_pairing(m: &Matroid, p: &Pairing) -> std::result::Result<(), String> {
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in &p.pairs {
        if !m.contains_edge(a) || !m.contains_edge(b) {
            return Err(format!("pair ({a}, {b}) is not inside E(M)"));
        }
        if !m.contains_edge(a ^ b) {
            return Err(format!("pair ({a}, {b}) sums to {} outside E(M)", a ^ b));
        }
        if !seen.insert(a) || !seen.insert(b) {
            return Err(format!("pair ({a}, {b}) reuses an element"));
        }
    }
    if let Some(x) = p.leftover {
        if !m.contains_edge(x) || !seen.insert(x) {
            return Err(format!("leftover {x} invalid"));
        }
    }
    let expected_leftover = m.size() % 2 == 1;
    if seen.len() as u64 != m.size() || p.leftover.is_some() != expected_leftover {
        return Err(format!("covers {} of {} elements", seen.len(), m.size()));
    }
    Ok(())
}
