use crate::error::Result;
use crate::graph::{Graph, GraphBuilder};
use crate::mis::{Budget, Solver};
use crate::set::VertexSet;

pub const GADGET_SIZE: usize = 22;
pub const GADGET_ALPHA: usize = 9;

/// Largest independent set meeting `X` in `j` and `Y` in `i` vertices, at
/// row `i`, column `j`.
pub const GADGET_TABLE: [[usize; 3]; 3] = [[7, 8, 8], [8, 9, 9], [7, 8, 9]];

// Corner c = 2*ix + iy, where ix picks x or x' and iy picks y or y'.
// Ids: x, x', y, y' = 0..4; z = 4 + c; b = 8 + c; a = 12 + c; then the six
// remaining vertices 16..22.
const EDGES: [(usize, usize); 37] = [
    (0, 4),
    (0, 5),
    (1, 6),
    (1, 7),
    (2, 4),
    (2, 6),
    (2, 16),
    (2, 18),
    (3, 5),
    (3, 7),
    (3, 17),
    (3, 19),
    (4, 8),
    (4, 16),
    (5, 9),
    (5, 17),
    (6, 10),
    (6, 18),
    (7, 11),
    (7, 19),
    (8, 12),
    (8, 16),
    (9, 13),
    (9, 17),
    (10, 14),
    (10, 18),
    (11, 15),
    (11, 19),
    (12, 13),
    (14, 15),
    (16, 18),
    (16, 20),
    (17, 19),
    (17, 20),
    (18, 21),
    (19, 21),
    (20, 21),
];

const CORNERS: [&str; 4] = ["x,y", "x,y'", "x',y", "x',y'"];
// Ring order of the six remaining vertices.
const RING: [usize; 6] = [20, 16, 18, 21, 19, 17];

/// The 22-vertex planar crossover gadget.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub x: usize,
    pub x_prime: usize,
    pub y: usize,
    pub y_prime: usize,
    /// Indexed by corner `2*ix + iy`: `(x,y), (x,y'), (x',y), (x',y')`.
    pub z: [usize; 4],
    pub a: [usize; 4],
    pub b: [usize; 4],
    pub c6: [usize; 6],
}

pub fn gjs_gadget() -> GadgetGraph {
    let mut b = GraphBuilder::new(GADGET_SIZE);
    for (v, name) in ["x", "x'", "y", "y'"].iter().enumerate() {
        b.set_label(v, *name).expect("in range");
    }
    for (c, corner) in CORNERS.iter().enumerate() {
        b.set_label(4 + c, format!("z[{corner}]")).expect("in range");
        b.set_label(8 + c, format!("b[{corner}]")).expect("in range");
        b.set_label(12 + c, format!("a[{corner}]")).expect("in range");
    }
    for (i, &v) in RING.iter().enumerate() {
        b.set_label(v, format!("c{}", i + 1)).expect("in range");
    }
    for &(u, v) in &EDGES {
        b.add_edge(u, v).expect("static edge list");
    }
    GadgetGraph {
        graph: b.build().expect("unique labels"),
        x: 0,
        x_prime: 1,
        y: 2,
        y_prime: 3,
        z: [4, 5, 6, 7],
        b: [8, 9, 10, 11],
        a: [12, 13, 14, 15],
        c6: RING,
    }
}

impl GadgetGraph {
    pub fn x_pair(&self) -> [usize; 2] {
        [self.x, self.x_prime]
    }

    pub fn y_pair(&self) -> [usize; 2] {
        [self.y, self.y_prime]
    }

    /// Largest independent set `S` with `|S ∩ Y| = i` and `|S ∩ X| = j`, at
    /// `[i][j]`; `None` when no such set exists.
    pub fn constrained_table(&self) -> Result<[[Option<usize>; 3]; 3]> {
        let g = &self.graph;
        let budget = Budget::unlimited();
        let solver = Solver::new(g, &budget);
        let ends: Vec<usize> = self.x_pair().into_iter().chain(self.y_pair()).collect();
        let mut table = [[None; 3]; 3];
        for mask in 0u32..16 {
            let chosen = VertexSet::from_iter_in(g.n(), (0..4).filter(|i| mask >> i & 1 == 1).map(|i| ends[i]));
            if !g.is_independent(&chosen) {
                continue;
            }
            let mut rest = g.vertex_set();
            for &e in &ends {
                rest.remove(e);
            }
            for v in &chosen {
                rest.difference_with(g.neighbors(v));
            }
            let size = solver.max_within(&rest)?.len() + chosen.len();
            let (xs, ys) = ((mask & 3).count_ones() as usize, (mask >> 2).count_ones() as usize);
            let cell = &mut table[ys][xs];
            *cell = Some(cell.map_or(size, |c: usize| c.max(size)));
        }
        Ok(table)
    }
}
