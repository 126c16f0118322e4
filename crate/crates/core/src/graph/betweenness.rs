use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::NetworkGraph;

/// Shortest-path betweenness summed over ordered source/target pairs
/// (Brandes accumulation on BFS DAGs), not normalized.
pub fn betweenness_raw(graph: &NetworkGraph) -> Vec<f64> {
    let n = graph.node_count();
    let mut score = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![u32::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n as u32 {
        for &v in &order {
            sigma[v as usize] = 0.0;
            dist[v as usize] = u32::MAX;
            delta[v as usize] = 0.0;
        }
        order.clear();
        sigma[s as usize] = 1.0;
        dist[s as usize] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let dv = dist[v as usize];
            for &w in graph.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
                if dist[w as usize] == dv + 1 {
                    sigma[w as usize] += sigma[v as usize];
                }
            }
        }
        for &w in order.iter().rev() {
            let dw = dist[w as usize];
            let coeff = (1.0 + delta[w as usize]) / sigma[w as usize];
            for &v in graph.neighbors(w) {
                if dw > 0 && dist[v as usize] == dw - 1 {
                    delta[v as usize] += sigma[v as usize] * coeff;
                }
            }
            if w != s {
                score[w as usize] += delta[w as usize];
            }
        }
    }
    score
}

/// Betweenness divided by the `(n - 1)(n - 2)` ordered pairs that exclude
/// the node itself, so values lie in `[0, 1]`.
pub fn betweenness(graph: &NetworkGraph) -> Vec<f64> {
    let n = graph.node_count();
    let mut score = betweenness_raw(graph);
    if n > 2 {
        let pairs = ((n - 1) * (n - 2)) as f64;
        for s in &mut score {
            *s /= pairs;
        }
    }
    score
}
