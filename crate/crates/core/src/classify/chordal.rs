//! Chordality by lexicographic breadth-first search, used as an independent
//! check on linear resolutions of edge ideals: the edge ideal of `G` has a
//! linear resolution iff the complement of `G` is chordal.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Adjacency as bitmasks, one per vertex.
fn lex_bfs(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        done[v] = true;
        visit.push(v);
        for w in 0..n {
            if !done[w] && adj[v] >> w & 1 == 1 {
                labels[w].push(n - step);
            }
        }
    }
    visit
}

/// A graph is chordal iff the reverse of a LexBFS order is a perfect
/// elimination ordering.
pub fn is_chordal(adj: &[u64]) -> bool {
    let visit = lex_bfs(adj);
    let n = adj.len();
    let mut pos = vec![0usize; n];
    for (k, &v) in visit.iter().enumerate() {
        pos[v] = k;
    }
    // eliminating in reverse visit order: the neighbors of v visited before v
    // must form a clique
    visit.iter().all(|&v| {
        let earlier: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1 && pos[w] < pos[v]).collect();
        earlier.iter().enumerate().all(|(a, &x)| earlier[a + 1..].iter().all(|&y| adj[x] >> y & 1 == 1))
    })
}

/// Complement of the graph on `n` vertices whose edges are `edges`.
pub fn complement_is_chordal(n: usize, edges: &[(usize, usize)]) -> bool {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adj: Vec<u64> = (0..n).map(|v| all & !(1u64 << v)).collect();
    for &(a, b) in edges {
        adj[a] &= !(1u64 << b);
        adj[b] &= !(1u64 << a);
    }
    is_chordal(&adj)
}

/// For a squarefree ideal generated in degree 2, the edge ideal of a graph
/// `G` on all variables: whether the complement of `G` is chordal.
pub fn is_chordal_complement_oracle(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_squarefree() || ideal.single_degree() != Some(2) {
        return Err(Error::WrongDegree { expected: 2 });
    }
    let edges: Vec<(usize, usize)> = ideal
        .supports()
        .iter()
        .map(|s| {
            let mut it = s.iter();
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    Ok(complement_is_chordal(ideal.nvars(), &edges))
}
