//! Integer maximum flow (Dinic).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    rev: usize,
}

/// A directed network with positive integer capacities.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    source: usize,
    sink: usize,
    adj: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count {
            return Err(Error::InvalidFlowNetwork("terminal outside node range"));
        }
        if source == sink {
            return Err(Error::InvalidFlowNetwork("source equals sink"));
        }
        Ok(FlowNetwork {
            source,
            sink,
            adj: vec![Vec::new(); node_count],
        })
    }

    /// Unit network for bipartite matching: source -> left -> right -> sink,
    /// every arc of capacity 1. Nodes are `0` source, `1` sink, then left,
    /// then right.
    pub fn unit_bipartite(left: usize, right: usize, adjacency: &[Vec<usize>]) -> Result<Self> {
        let mut net = FlowNetwork::new(2 + left + right, 0, 1)?;
        for (i, row) in adjacency.iter().enumerate() {
            net.add_arc(0, 2 + i, 1)?;
            for &r in row {
                net.add_arc(2 + i, 2 + left + r, 1)?;
            }
        }
        for r in 0..right {
            net.add_arc(2 + left + r, 1, 1)?;
        }
        Ok(net)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> Result<()> {
        let n = self.adj.len();
        if from >= n || to >= n {
            return Err(Error::InvalidFlowNetwork("arc endpoint outside node range"));
        }
        if cap == 0 {
            return Err(Error::InvalidFlowNetwork("arc capacity must be positive"));
        }
        if from == to {
            return Err(Error::InvalidFlowNetwork("self loop"));
        }
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc {
            to,
            cap,
            rev: rev_from,
        });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
        });
        Ok(())
    }

    /// Exact maximum source-to-sink flow value. The network is not modified.
    pub fn max_flow(&self) -> u64 {
        let mut residual = self.adj.clone();
        let n = residual.len();
        let mut level = vec![usize::MAX; n];
        let mut cursor = vec![0usize; n];
        let mut queue = VecDeque::new();
        let mut total = 0;
        loop {
            level.iter_mut().for_each(|l| *l = usize::MAX);
            level[self.source] = 0;
            queue.clear();
            queue.push_back(self.source);
            while let Some(u) = queue.pop_front() {
                for arc in &residual[u] {
                    if arc.cap > 0 && level[arc.to] == usize::MAX {
                        level[arc.to] = level[u] + 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            if level[self.sink] == usize::MAX {
                return total;
            }
            cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.push(&mut residual, &level, &mut cursor);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// One blocking-flow augmentation along the level graph, iteratively.
    fn push(&self, residual: &mut [Vec<Arc>], level: &[usize], cursor: &mut [usize]) -> u64 {
        let mut path: Vec<(usize, usize)> = Vec::new();
        let mut u = self.source;
        loop {
            if u == self.sink {
                let bottleneck = path
                    .iter()
                    .map(|&(node, i)| residual[node][i].cap)
                    .min()
                    .unwrap_or(0);
                for &(node, i) in &path {
                    let (to, rev) = (residual[node][i].to, residual[node][i].rev);
                    residual[node][i].cap -= bottleneck;
                    residual[to][rev].cap += bottleneck;
                }
                return bottleneck;
            }
            let mut advanced = false;
            while cursor[u] < residual[u].len() {
                let arc = &residual[u][cursor[u]];
                if arc.cap > 0 && level[arc.to] == level[u] + 1 {
                    path.push((u, cursor[u]));
                    u = arc.to;
                    advanced = true;
                    break;
                }
                cursor[u] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                match path.pop() {
                    Some((prev, i)) => {
                        cursor[prev] = i + 1;
                        u = prev;
                    }
                    None => return 0,
                }
            }
        }
    }
}
