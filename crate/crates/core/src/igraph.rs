//! The intersection graph of a group: one vertex per proper nontrivial
//! subgroup, an edge whenever two subgroups share a non-identity element.

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::lattice::SubgroupLattice;
use serde::Serialize;

/// Undirected, loop-free. Vertices carry the lattice ids of their subgroups
/// so witnesses stay traceable back to explicit element sets; adjacency is
/// stored as one bit vector per vertex, indexed by vertex position.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    spec_text: String,
    group_order: usize,
    vertex_ids: Vec<usize>,
    orders: Vec<usize>,
    members: Vec<Vec<usize>>,
    adj: Vec<ElemSet>,
    frattini_vertex: Option<usize>,
}

/// Vertex per proper nontrivial subgroup (lattice order preserved); edge iff
/// the member-set intersection has size greater than one. A group with no
/// proper nontrivial subgroup yields the empty graph.
pub fn build_intersection_graph(lattice: &SubgroupLattice) -> IntersectionGraph {
    let verts: Vec<_> = lattice.proper_nontrivial().collect();
    let v = verts.len();
    let mut adj = vec![ElemSet::new(v); v];
    for i in 0..v {
        for j in (i + 1)..v {
            if verts[i].members.intersection_len(&verts[j].members) > 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let frattini = lattice.frattini();
    let frattini_vertex = verts.iter().position(|s| s.id == frattini.id);
    IntersectionGraph {
        spec_text: lattice.group().spec_text().to_string(),
        group_order: lattice.group().order(),
        vertex_ids: verts.iter().map(|s| s.id).collect(),
        orders: verts.iter().map(|s| s.order).collect(),
        members: verts.iter().map(|s| s.members.to_vec()).collect(),
        adj,
        frattini_vertex,
    }
}

impl IntersectionGraph {
    /// Assemble a graph from raw parts: ascending vertex ids, their subgroup
    /// orders, and undirected edges over those ids. Used for synthetic graphs
    /// in tests and tooling.
    pub fn from_parts(
        spec_text: &str,
        group_order: usize,
        vertex_ids: Vec<usize>,
        orders: Vec<usize>,
        edges: &[(usize, usize)],
    ) -> Result<IntersectionGraph, Error> {
        assert_eq!(vertex_ids.len(), orders.len());
        assert!(vertex_ids.windows(2).all(|w| w[0] < w[1]));
        let v = vertex_ids.len();
        let mut adj = vec![ElemSet::new(v); v];
        let pos = |id: usize| -> Result<usize, Error> {
            vertex_ids.binary_search(&id).map_err(|_| Error::InvalidVertex(id))
        };
        for &(a, b) in edges {
            let (i, j) = (pos(a)?, pos(b)?);
            if i == j {
                return Err(Error::InvalidVertex(a));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(IntersectionGraph {
            spec_text: spec_text.to_string(),
            group_order,
            vertex_ids,
            orders,
            members: vec![Vec::new(); v],
            adj,
            frattini_vertex: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Lattice ids of the vertices, ascending.
    pub fn vertex_ids(&self) -> &[usize] {
        &self.vertex_ids
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn spec_text(&self) -> &str {
        &self.spec_text
    }

    /// Subgroup order of the vertex at `position`.
    pub fn order_at(&self, position: usize) -> usize {
        self.orders[position]
    }

    pub(crate) fn position_of(&self, id: usize) -> Result<usize, Error> {
        self.vertex_ids
            .binary_search(&id)
            .map_err(|_| Error::InvalidVertex(id))
    }

    pub(crate) fn id_at(&self, position: usize) -> usize {
        self.vertex_ids[position]
    }

    pub(crate) fn adj_at(&self, position: usize) -> &ElemSet {
        &self.adj[position]
    }

    /// Position of the first vertex whose subgroup has the given order, if
    /// any. Convenient for tests phrased as "the order-3 vertex".
    pub fn position_with_order(&self, order: usize) -> Option<usize> {
        self.orders.iter().position(|&o| o == order)
    }

    pub fn degree(&self, id: usize) -> Result<usize, Error> {
        Ok(self.adj[self.position_of(id)?].len())
    }

    /// Neighbor vertex ids, ascending.
    pub fn neighbors(&self, id: usize) -> Result<Vec<usize>, Error> {
        let p = self.position_of(id)?;
        Ok(self.adj[p].iter().map(|q| self.vertex_ids[q]).collect())
    }

    pub fn has_edge_ids(&self, a: usize, b: usize) -> Result<bool, Error> {
        let (i, j) = (self.position_of(a)?, self.position_of(b)?);
        Ok(self.adj[i].contains(j))
    }

    /// Deterministic DOT document: vertices in lattice order labelled with
    /// their subgroup order, the Frattini subgroup marked with a Φ when it is
    /// a vertex, edges listed with the smaller endpoint first.
    pub fn export_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.spec_text);
        for (p, id) in self.vertex_ids.iter().enumerate() {
            let phi = if self.frattini_vertex == Some(p) {
                " Φ"
            } else {
                ""
            };
            out.push_str(&format!("  s{id} [label=\"{}{phi}\"];\n", self.orders[p]));
        }
        for i in 0..self.vertex_count() {
            for j in self.adj[i].iter() {
                if i < j {
                    out.push_str(&format!(
                        "  s{} -- s{};\n",
                        self.vertex_ids[i], self.vertex_ids[j]
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON document with the schema
    /// `{"group", "order", "vertices": [{"id", "order", "members"}], "edges": [[i, j], ...]}`
    /// where edges pair vertex ids with the smaller id first.
    pub fn export_json(&self) -> String {
        #[derive(Serialize)]
        struct VertexDoc<'a> {
            id: usize,
            order: usize,
            members: &'a [usize],
        }
        #[derive(Serialize)]
        struct GraphDoc<'a> {
            group: &'a str,
            order: usize,
            vertices: Vec<VertexDoc<'a>>,
            edges: Vec<[usize; 2]>,
        }
        let mut edges = Vec::new();
        for i in 0..self.vertex_count() {
            for j in self.adj[i].iter() {
                if i < j {
                    edges.push([self.vertex_ids[i], self.vertex_ids[j]]);
                }
            }
        }
        let doc = GraphDoc {
            group: &self.spec_text,
            order: self.group_order,
            vertices: self
                .vertex_ids
                .iter()
                .enumerate()
                .map(|(p, &id)| VertexDoc {
                    id,
                    order: self.orders[p],
                    members: &self.members[p],
                })
                .collect(),
            edges,
        };
        serde_json::to_string_pretty(&doc).expect("graph document serializes")
    }
}
