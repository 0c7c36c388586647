use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Edge between walls `a < b` (hyperplane indices) of weight `≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    pub weight: usize,
}

/// The Coxeter diagram at a chamber: one vertex per wall, an edge of weight
/// `w(H ∩ H′)` whenever that line lies on at least three hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoxeterDiagram {
    pub walls: Vec<usize>,
    pub edges: Vec<DiagramEdge>,
}

impl CoxeterDiagram {
    pub fn new(walls: Vec<usize>, weight: impl Fn(usize, usize) -> usize) -> Self {
        let mut edges = Vec::new();
        for (i, &a) in walls.iter().enumerate() {
            for &b in &walls[i + 1..] {
                let w = weight(a, b);
                if w >= 3 {
                    edges.push(DiagramEdge { a: a.min(b), b: a.max(b), weight: w });
                }
            }
        }
        edges.sort();
        Self { walls, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.walls.len()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 3)
    }

    /// Vertex sets of the connected components, each sorted, in order of
    /// smallest wall.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp: BTreeMap<usize, usize> = self.walls.iter().map(|&w| (w, w)).collect();
        fn root(comp: &mut BTreeMap<usize, usize>, mut x: usize) -> usize {
            while comp[&x] != x {
                x = comp[&x];
            }
            x
        }
        for e in &self.edges {
            let (ra, rb) = (root(&mut comp, e.a), root(&mut comp, e.b));
            if ra != rb {
                comp.insert(ra.max(rb), ra.min(rb));
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &w in &self.walls {
            let r = root(&mut comp, w);
            groups.entry(r).or_default().push(w);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        for g in &mut out {
            g.sort_unstable();
        }
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Name of the diagram as a product of Coxeter types, e.g. `A4`, `D4`,
    /// `A1×A1×A1×A1`; unrecognized components get a weight signature.
    pub fn type_name(&self) -> String {
        let mut names: Vec<String> = self.components().iter().map(|c| self.component_type(c)).collect();
        names.sort();
        names.join("×")
    }

    fn component_type(&self, vertices: &[usize]) -> String {
        let k = vertices.len();
        let edges: Vec<&DiagramEdge> =
            self.edges.iter().filter(|e| vertices.binary_search(&e.a).is_ok()).collect();
        let degree = |v: usize| edges.iter().filter(|e| e.a == v || e.b == v).count();
        let fallback = || {
            let mut w: Vec<String> = edges.iter().map(|e| e.weight.to_string()).collect();
            w.sort();
            format!("?{k}[{}]", w.join(","))
        };
        if k == 1 {
            return "A1".into();
        }
        if k >= 3 && edges.len() == k && vertices.iter().all(|&v| degree(v) == 2) && edges.iter().all(|e| e.weight == 3) {
            // a single cycle of weight-3 edges: affine type Ã
            return format!("~A{}", k - 1);
        }
        if edges.len() != k - 1 {
            return fallback();
        }
        let max_degree = vertices.iter().map(|&v| degree(v)).max().unwrap_or(0);
        if max_degree <= 2 {
            // walk the path from an endpoint, recording edge weights
            let mut at = *vertices.iter().find(|&&v| degree(v) == 1).expect("a path has an endpoint");
            let mut prev = usize::MAX;
            let mut weights = Vec::new();
            while let Some(e) = edges.iter().find(|e| (e.a == at || e.b == at) && e.a != prev && e.b != prev) {
                weights.push(e.weight);
                prev = at;
                at = if e.a == at { e.b } else { e.a };
            }
            return path_type(&weights).unwrap_or_else(fallback);
        }
        if max_degree == 3 && edges.iter().all(|e| e.weight == 3) {
            let centre = *vertices.iter().find(|&&v| degree(v) == 3).expect("branch vertex");
            if vertices.iter().filter(|&&v| degree(v) == 3).count() == 1 {
                let mut arms: Vec<usize> = edges
                    .iter()
                    .filter(|e| e.a == centre || e.b == centre)
                    .map(|e| arm_length(&edges, centre, if e.a == centre { e.b } else { e.a }))
                    .collect();
                arms.sort_unstable();
                return match arms[..] {
                    [1, 1, _] => format!("D{k}"),
                    [1, 2, 2] => "E6".into(),
                    [1, 2, 3] => "E7".into(),
                    [1, 2, 4] => "E8".into(),
                    _ => fallback(),
                };
            }
        }
        fallback()
    }
}

fn arm_length(edges: &[&DiagramEdge], from: usize, start: usize) -> usize {
    let (mut prev, mut at, mut len) = (from, start, 1);
    while let Some(e) = edges.iter().find(|e| (e.a == at || e.b == at) && e.a != prev && e.b != prev) {
        prev = at;
        at = if e.a == at { e.b } else { e.a };
        len += 1;
    }
    len
}

fn path_type(w: &[usize]) -> Option<String> {
    let k = w.len() + 1;
    if w.iter().all(|&x| x == 3) {
        return Some(format!("A{k}"));
    }
    if k == 2 {
        return Some(match w[0] {
            4 => "B2".into(),
            5 => "H2".into(),
            6 => "G2".into(),
            m => format!("I2({m})"),
        });
    }
    let special: Vec<(usize, usize)> = w.iter().copied().enumerate().filter(|&(_, x)| x != 3).collect();
    let [(pos, weight)] = special[..] else { return None };
    let at_end = pos == 0 || pos == w.len() - 1;
    match (weight, at_end) {
        (4, true) => Some(format!("B{k}")),
        (4, false) if k == 4 => Some("F4".into()),
        (5, true) if k <= 4 => Some(format!("H{k}")),
        _ => None,
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.type_name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(n: usize, edges: &[(usize, usize, usize)]) -> CoxeterDiagram {
        CoxeterDiagram::new((0..n).collect(), |a, b| {
            edges.iter().find(|&&(x, y, _)| (x, y) == (a, b) || (y, x) == (a, b)).map_or(2, |e| e.2)
        })
    }

    #[test]
    fn named_types() {
        assert_eq!(diagram(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 3)]).type_name(), "A4");
        assert_eq!(diagram(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 4)]).type_name(), "B4");
        assert_eq!(diagram(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]).type_name(), "F4");
        assert_eq!(diagram(4, &[(3, 1, 5), (1, 2, 3), (2, 0, 3)]).type_name(), "H4");
        assert_eq!(diagram(4, &[(0, 1, 3), (0, 2, 3), (0, 3, 3)]).type_name(), "D4");
        assert_eq!(diagram(4, &[]).type_name(), "A1×A1×A1×A1");
        assert_eq!(diagram(4, &[(0, 2, 3), (1, 3, 4)]).type_name(), "A2×B2");
        assert_eq!(diagram(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]).type_name(), "~A2");
        assert_eq!(diagram(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 3), (3, 0, 3)]).type_name(), "~A3");
        assert_eq!(diagram(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 4)]).type_name(), "?3[3,3,4]");
    }

    #[test]
    fn connectivity() {
        assert!(diagram(4, &[(0, 1, 3), (0, 2, 3), (0, 3, 3)]).is_connected());
        let d = diagram(4, &[(0, 2, 3)]);
        assert_eq!(d.components(), vec![vec![0, 2], vec![1], vec![3]]);
        assert!(!d.is_connected());
    }
}
