use std::collections::VecDeque;

use crate::action::coset_action;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::io::{parse_edge_list, read_group, write_edge_list};
use crate::perm::{Permutation, Point};

/// A finite simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Point>>,
}

impl Graph {
    /// Rejects loops, repeated edges and out-of-range vertices.
    pub fn new(n: usize, edges: &[(Point, Point)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Graph(format!("edge {u} {v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Graph(format!("repeated edge at {u}")));
            }
        }
        Ok(Graph { adj })
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let (n, edges) = parse_edge_list(text)?;
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        write_edge_list(self.order(), &self.edges())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: Point) -> &[Point] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: Point, v: Point) -> bool {
        (u as usize) < self.order() && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v as usize > u).map(|&v| (u as Point, v)));
        }
        out
    }

    /// The common valency, or `None` if the graph is not regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    fn distances(&self, s: Point) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s as usize] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize].unwrap();
            for &v in self.neighbours(u) {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances(0).iter().all(Option::is_some)
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.order() as Point {
            let mut dist = vec![usize::MAX; self.order()];
            let mut parent = vec![Point::MAX; self.order()];
            dist[s as usize] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbours(u) {
                    if dist[v as usize] == usize::MAX {
                        dist[v as usize] = dist[u as usize] + 1;
                        parent[v as usize] = u;
                        queue.push_back(v);
                    } else if parent[u as usize] != v {
                        let len = dist[u as usize] + dist[v as usize] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// True if every element of the group maps edges to edges.
    pub fn is_preserved_by(&self, group: &PermGroup) -> bool {
        group.degree() == self.order()
            && group.generators().iter().all(|g| {
                self.edges()
                    .iter()
                    .all(|&(u, v)| self.has_edge(g.apply(u), g.apply(v)))
            })
    }
}

/// The orbital graph of `G` on the cosets of `H` containing `{H, Ha}`.
/// Requires `⟨H, a⟩ = G`; vertex 0 is the coset `H`.
pub fn coset_graph(group: &PermGroup, subgroup: &PermGroup, a: &Permutation) -> Result<(Graph, PermGroup)> {
    if !subgroup.with_generator(a).same_group(group) {
        return Err(Error::InvalidParameter("H and a do not generate G".into()));
    }
    let action = coset_action(group, subgroup)?;
    let image = action.image.clone();
    let b = action.hom().image(a)?.apply(0);
    if b == 0 {
        return Err(Error::InvalidParameter("a lies in H".into()));
    }
    let n = action.degree();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![(0, b)];
    let key = |u: Point, v: Point| (u.min(v), u.max(v));
    seen.insert(key(0, b));
    while let Some((u, v)) = queue.pop() {
        for g in image.generators() {
            let e = key(g.apply(u), g.apply(v));
            if seen.insert(e) {
                queue.push(e);
            }
        }
    }
    let edges: Vec<(Point, Point)> = seen.into_iter().collect();
    Ok((Graph::new(n, &edges)?, image))
}

/// A graph with a group of automorphisms acting arc-transitively on it.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub group: PermGroup,
}

impl Fixture {
    fn load(name: &str, edges: &str, group: &str) -> Fixture {
        let graph = Graph::parse(edges).expect("fixture edge list");
        let group = read_group(group).expect("fixture group");
        assert!(graph.is_preserved_by(&group), "{name}: group does not preserve the graph");
        Fixture {
            name: name.to_owned(),
            graph,
            group,
        }
    }
}

/// The incidence graph of the Fano plane with `PGL(3,2)` extended by a duality.
pub fn heawood() -> Fixture {
    Fixture::load(
        "heawood",
        include_str!("../../fixtures/heawood.edges"),
        include_str!("../../fixtures/heawood.json"),
    )
}

/// Duads against synthemes of a 6-set, with `Aut(S6)`.
pub fn tutte_coxeter() -> Fixture {
    Fixture::load(
        "tutte_coxeter",
        include_str!("../../fixtures/tutte_coxeter.edges"),
        include_str!("../../fixtures/tutte_coxeter.json"),
    )
}

/// Kneser graph on 2-subsets of a 5-set with `S5`.
pub fn petersen() -> Fixture {
    Fixture::load(
        "petersen",
        include_str!("../../fixtures/petersen.edges"),
        include_str!("../../fixtures/petersen.json"),
    )
}

/// The Cayley graph of `F_16⁺` on the fifth powers with the affine maps
/// `x ↦ λx^σ + c`, `λ` a fifth power, `σ` a field automorphism.
pub fn cayley_f16_quintic() -> Fixture {
    Fixture::load(
        "cayley_f16_quintic",
        include_str!("../../fixtures/cayley_f16_quintic.edges"),
        include_str!("../../fixtures/cayley_f16_quintic.json"),
    )
}

/// `K_n` with `S_n`.
pub fn complete(n: usize) -> Result<Fixture> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("K_{n} needs n >= 3")));
    }
    let mut edges = Vec::new();
    for u in 0..n as Point {
        for v in u + 1..n as Point {
            edges.push((u, v));
        }
    }
    let cycle: Vec<Point> = (0..n as Point).collect();
    let group = PermGroup::new(
        n,
        vec![
            Permutation::from_cycles(n, &[&[0, 1]])?,
            Permutation::from_cycles(n, &[&cycle])?,
        ],
    )?;
    Ok(Fixture {
        name: format!("complete_{n}"),
        graph: Graph::new(n, &edges)?,
        group,
    })
}

/// `K_{n,n}` with `S_n wr S_2`; left part `0..n`, right part `n..2n`.
pub fn complete_bipartite(n: usize) -> Result<Fixture> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("K_{{{n},{n}}} needs n >= 2")));
    }
    let m = 2 * n;
    let mut edges = Vec::new();
    for u in 0..n as Point {
        for v in n as Point..m as Point {
            edges.push((u, v));
        }
    }
    let left: Vec<Point> = (0..n as Point).collect();
    let swaps: Vec<Vec<Point>> = (0..n as Point).map(|i| vec![i, n as Point + i]).collect();
    let swap_refs: Vec<&[Point]> = swaps.iter().map(Vec::as_slice).collect();
    let group = PermGroup::new(
        m,
        vec![
            Permutation::from_cycles(m, &[&[0, 1]])?,
            Permutation::from_cycles(m, &[&left])?,
            Permutation::from_cycles(m, &swap_refs)?,
        ],
    )?;
    Ok(Fixture {
        name: format!("complete_bipartite_{n}"),
        graph: Graph::new(m, &edges)?,
        group,
    })
}

/// Every built-in fixture.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        heawood(),
        tutte_coxeter(),
        petersen(),
        cayley_f16_quintic(),
        complete(4).expect("K4"),
        complete_bipartite(3).expect("K33"),
    ]
}

pub fn fixture_by_name(name: &str) -> Option<Fixture> {
    match name {
        "heawood" => Some(heawood()),
        "tutte_coxeter" | "tutte-coxeter" => Some(tutte_coxeter()),
        "petersen" => Some(petersen()),
        "cayley_f16_quintic" | "f16" => Some(cayley_f16_quintic()),
        _ => {
            if let Some(n) = name.strip_prefix("complete_bipartite_") {
                return n.parse().ok().and_then(|n| complete_bipartite(n).ok());
            }
            name.strip_prefix("complete_")
                .and_then(|n| n.parse().ok())
                .and_then(|n| complete(n).ok())
        }
    }
}
