use std::collections::HashMap;
use std::sync::Arc;

use super::{Refutation, SearchCaps, Undecided, Verdict};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vars::VarSubset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub complex: SimplicialComplex,
    pub step: DecompStep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompStep {
    /// At most one facet.
    Simplex,
    Shed {
        vertex: usize,
        link: Arc<DecompNode>,
        deletion: Arc<DecompNode>,
    },
}

/// No face of `lk x` is a facet of `del x`.
pub fn is_shedding_vertex(cx: &SimplicialComplex, x: usize) -> Result<bool> {
    if !cx.vertices().contains(x) {
        return Err(Error::NotAVertex(x + 1));
    }
    Ok(shedding(cx, x))
}

fn shedding(cx: &SimplicialComplex, x: usize) -> bool {
    let v = VarSubset::singleton(x);
    let link = cx.link(v);
    cx.deletion(v).facets().iter().all(|f| !link.contains_face(*f))
}

pub fn is_vertex_decomposable(cx: &SimplicialComplex, caps: &SearchCaps) -> Result<Verdict<Arc<DecompNode>>> {
    let mut search = DecompSearch { memo: HashMap::new(), explored: 0, max_nodes: caps.max_nodes };
    Ok(match search.solve(cx) {
        Some(Some(node)) => Verdict::Holds(node),
        Some(None) => Verdict::Fails(Refutation { explored: search.explored, covered: 0 }),
        None => Verdict::Undecided(Undecided {
            what: "decomposition search nodes",
            got: search.explored as usize,
            cap: caps.max_nodes as usize,
        }),
    })
}

struct DecompSearch {
    memo: HashMap<Vec<VarSubset>, Option<Arc<DecompNode>>>,
    explored: u64,
    max_nodes: u64,
}

impl DecompSearch {
    fn solve(&mut self, cx: &SimplicialComplex) -> Option<Option<Arc<DecompNode>>> {
        if cx.is_simplex() {
            return Some(Some(Arc::new(DecompNode { complex: cx.clone(), step: DecompStep::Simplex })));
        }
        if let Some(hit) = self.memo.get(cx.facets()) {
            return Some(hit.clone());
        }
        self.explored += 1;
        if self.explored > self.max_nodes {
            return None;
        }
        let mut found = None;
        for x in cx.vertices().iter() {
            if !shedding(cx, x) {
                continue;
            }
            let v = VarSubset::singleton(x);
            let Some(link) = self.solve(&cx.link(v))? else { continue };
            let Some(deletion) = self.solve(&cx.deletion(v))? else { continue };
            found = Some(Arc::new(DecompNode {
                complex: cx.clone(),
                step: DecompStep::Shed { vertex: x, link, deletion },
            }));
            break;
        }
        self.memo.insert(cx.facets().to_vec(), found.clone());
        Some(found)
    }
}
