use alloc::vec::Vec;

use super::NetworkGraph;

/// Disjoint-set forest with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let grand = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = grand;
            v = grand;
        }
        v
    }

    /// Merges the sets of `a` and `b`; returns the size of the merged set.
    pub fn union(&mut self, a: u32, b: u32) -> u32 {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return self.size[ra as usize];
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.size[ra as usize]
    }

    pub fn set_size(&mut self, v: u32) -> u32 {
        let r = self.find(v);
        self.size[r as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub size: usize,
    /// Sorted member node ids.
    pub members: Vec<u32>,
}

/// Largest connected component; ties go to the component holding the
/// lowest node id.
pub fn largest_component(graph: &NetworkGraph) -> Component {
    let n = graph.node_count();
    if n == 0 {
        return Component { size: 0, members: Vec::new() };
    }
    let mut uf = UnionFind::new(n);
    for &(u, v) in graph.edges() {
        uf.union(u, v);
    }
    let mut best_root = uf.find(0);
    let mut best_size = uf.set_size(0);
    for v in 1..n as u32 {
        let s = uf.set_size(v);
        if s > best_size {
            best_size = s;
            best_root = uf.find(v);
        }
    }
    let members: Vec<u32> = (0..n as u32).filter(|&v| uf.find(v) == best_root).collect();
    Component {
        size: members.len(),
        members,
    }
}
