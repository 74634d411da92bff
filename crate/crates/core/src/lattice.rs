//! The inclusion lattice of partitions with bounded parts, labeled by supernorm.
//!
//! Level `k` holds the partitions of length `k` with parts at most
//! `max_part`. An edge joins `λ` to `λ·<i^1>`, a covering relation for
//! multiset inclusion; on supernorms it is multiplication by the prime `p_i`,
//! a covering relation for divisibility.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::supernorm::{supernorm, BigNat};
use crate::Part;

/// Largest lattice [`lattice_levels`] will build.
pub const MAX_LATTICE_NODES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNode {
    pub partition: Partition,
    pub supernorm: BigNat,
    pub level: usize,
}

/// Nodes in level order, edges as `(lower, upper)` index pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lattice {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn level(&self, k: usize) -> impl Iterator<Item = &LatticeNode> {
        self.nodes.iter().filter(move |n| n.level == k)
    }

    /// Graphviz digraph drawn bottom-up, each node labeled with its partition
    /// and supernorm.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n    rankdir=BT;\n    node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            writeln!(
                out,
                "    n{i} [label=\"{}\\n{}\"];",
                node.partition, node.supernorm
            )
            .unwrap();
        }
        for (lower, upper) in &self.edges {
            writeln!(out, "    n{lower} -> n{upper};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Number of multisets of size `k` over `m` values, saturating.
fn multiset_count(m: usize, k: usize) -> usize {
    let mut total: usize = 0;
    let mut level: u128 = 1;
    for j in 0..=k {
        total = total.saturating_add(usize::try_from(level).unwrap_or(usize::MAX));
        // C(m+j, j+1) = C(m+j-1, j) * (m+j) / (j+1)
        level = level.saturating_mul((m + j) as u128) / (j as u128 + 1);
    }
    total
}

/// Builds levels `0..=depth` of the lattice of partitions with parts in `1..=max_part`.
pub fn lattice_levels(depth: usize, max_part: Part) -> Result<Lattice> {
    if max_part == 0 {
        return Err(Error::LimitExceeded("max part must be at least 1".into()));
    }
    if multiset_count(max_part as usize, depth) > MAX_LATTICE_NODES {
        return Err(Error::LimitExceeded(format!(
            "depth {depth} with max part {max_part} needs more than {MAX_LATTICE_NODES} nodes"
        )));
    }

    let generators: Vec<Partition> = (1..=max_part)
        .map(|i| Partition::from_parts([i]).expect("positive part"))
        .collect();
    let mut lattice = Lattice::default();
    lattice.nodes.push(LatticeNode {
        partition: Partition::empty(),
        supernorm: BigNat::one(),
        level: 0,
    });
    let mut previous: Vec<usize> = vec![0];
    for level in 1..=depth {
        let mut index: BTreeMap<Partition, usize> = BTreeMap::new();
        let mut current = Vec::new();
        for &lower in &previous {
            for generator in &generators {
                let partition = lattice.nodes[lower].partition.multiply(generator);
                let upper = match index.get(&partition) {
                    Some(&i) => i,
                    None => {
                        let i = lattice.nodes.len();
                        let supernorm = supernorm(&partition)?;
                        index.insert(partition.clone(), i);
                        lattice.nodes.push(LatticeNode {
                            partition,
                            supernorm,
                            level,
                        });
                        current.push(i);
                        i
                    }
                };
                lattice.edges.push((lower, upper));
            }
        }
        previous = current;
    }
    Ok(lattice)
}
