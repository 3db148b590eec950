use super::{Graph, GraphError};

/// Adjacency-list graph without the 64-vertex cap. Used where work must stay
/// linear in the order (the cubic classifier) and for large generated inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseGraph {
    adj: Vec<Vec<usize>>,
}

impl SparseGraph {
    pub fn new(n: usize) -> Self {
        SparseGraph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SparseGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].contains(&v) {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
        Ok(())
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn to_dense(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        Graph::from_edges(self.n(), &edges)
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> Self {
        SparseGraph {
            adj: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }
}
