use std::collections::HashSet;

use crate::action::{induced_action, InducedAction};
use crate::constructions::{Fixture, Graph};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Point;
use crate::report::Verdict;
use crate::semiprim::{classify, is_semiregular, ActionLattice};
use crate::structure::is_nilpotent;

/// A connected simple graph with a group acting arc-transitively on it.
#[derive(Debug, Clone)]
pub struct ArcPair {
    pub graph: Graph,
    pub group: PermGroup,
    pub valency: usize,
    /// Size of the single orbit on ordered adjacent pairs.
    pub arcs: usize,
}

/// Checks adjacency preservation, connectivity, and that the orbit of one
/// arc has size `2|E|`.
pub fn check_arc_transitive(graph: &Graph, group: &PermGroup) -> Result<ArcPair> {
    if !graph.is_preserved_by(group) {
        return Err(Error::NotArcTransitive("group does not preserve adjacency".into()));
    }
    if !graph.is_connected() {
        return Err(Error::NotArcTransitive("graph is disconnected".into()));
    }
    if !group.is_transitive() {
        return Err(Error::NotArcTransitive("not vertex-transitive".into()));
    }
    let edges = graph.edges();
    let Some(&first) = edges.first() else {
        return Err(Error::NotArcTransitive("graph has no edges".into()));
    };
    let mut seen = HashSet::from([first]);
    let mut stack = vec![first];
    while let Some((u, v)) = stack.pop() {
        for g in group.generators() {
            let arc = (g.apply(u), g.apply(v));
            if seen.insert(arc) {
                stack.push(arc);
            }
        }
    }
    if seen.len() != 2 * edges.len() {
        return Err(Error::NotArcTransitive(format!(
            "arc orbit has size {} of {}",
            seen.len(),
            2 * edges.len()
        )));
    }
    Ok(ArcPair {
        graph: graph.clone(),
        group: group.clone(),
        valency: graph.valency().expect("vertex-transitive graphs are regular"),
        arcs: seen.len(),
    })
}

impl ArcPair {
    pub fn from_fixture(f: &Fixture) -> Result<ArcPair> {
        check_arc_transitive(&f.graph, &f.group)
    }

    pub fn neighbourhood(&self, x: Point) -> &[Point] {
        self.graph.neighbours(x)
    }

    /// Vertex 0 and its smallest neighbour.
    pub fn default_edge(&self) -> (Point, Point) {
        (0, self.graph.neighbours(0)[0])
    }

    pub fn check_edge(&self, x: Point, y: Point) -> Result<()> {
        if self.graph.has_edge(x, y) {
            Ok(())
        } else {
            Err(Error::NotAnEdge((x, y)))
        }
    }
}

/// `G_x` acting on `Γ(x)`; local point `i` is the `i`-th smallest neighbour.
pub fn local_action(pair: &ArcPair, x: Point) -> Result<InducedAction> {
    let gx = pair.group.point_stabilizer(x)?;
    induced_action(&gx, pair.neighbourhood(x))
}

/// Whether the local action is semiprimitive with a regular normal
/// nilpotent subgroup.
#[derive(Debug)]
pub struct LocalHypothesis {
    pub vertex: Point,
    pub local: InducedAction,
    pub lattice: ActionLattice,
    pub semiprimitive: bool,
    /// The regular normal nilpotent subgroup of the local action.
    pub regular_nilpotent: Option<PermGroup>,
    /// Number of regular normal nilpotent subgroups found.
    pub regular_nilpotent_count: usize,
}

impl LocalHypothesis {
    pub fn holds(&self) -> bool {
        self.semiprimitive && self.regular_nilpotent.is_some()
    }

    pub fn verdict(&self) -> Verdict {
        let mut v = Verdict::pass_if("local-hypothesis", self.holds() && self.regular_nilpotent_count == 1)
            .with("vertex", self.vertex)
            .with("local_degree", self.local.image.degree())
            .with("local_order", self.local.image.order().to_string())
            .with("semiprimitive", self.semiprimitive)
            .with("regular_nilpotent_count", self.regular_nilpotent_count);
        if let Some(n) = &self.regular_nilpotent {
            v = v.with("regular_nilpotent_order", n.order().to_string());
        }
        if !self.holds() {
            v.status = crate::report::Status::Skip;
            v = v.because("local action is not semiprimitive with a regular normal nilpotent subgroup");
        }
        v
    }
}

pub fn local_hypothesis(pair: &ArcPair) -> Result<LocalHypothesis> {
    local_hypothesis_at(pair, 0)
}

pub fn local_hypothesis_at(pair: &ArcPair, x: Point) -> Result<LocalHypothesis> {
    let local = local_action(pair, x)?;
    let lattice = ActionLattice::of(&local.image)?;
    let semiprimitive = local.image.is_transitive() && classify(&lattice).semiprimitive;
    let nilpotent: Vec<&PermGroup> = lattice.regular().filter(|n| is_nilpotent(n)).collect();
    Ok(LocalHypothesis {
        vertex: x,
        regular_nilpotent: nilpotent.first().map(|n| (*n).clone()),
        regular_nilpotent_count: nilpotent.len(),
        local,
        lattice,
        semiprimitive,
    })
}

/// The stabilisers and kernels of one edge `{x, y}`.
#[derive(Debug, Clone)]
pub struct Kernels {
    pub x: Point,
    pub y: Point,
    /// `G_x`.
    pub stabilizer_x: PermGroup,
    /// `G_{xy} = G_x ∩ G_y`.
    pub stabilizer_xy: PermGroup,
    /// `G_{{x,y}}`, the setwise stabiliser of the edge.
    pub edge_stabilizer: PermGroup,
    /// `G_x^{[1]}`, fixing `Γ(x)` pointwise.
    pub kernel_x: PermGroup,
    /// `G_{xy}^{[1]}`, fixing `Γ(x) ∪ Γ(y)` pointwise.
    pub kernel_xy: PermGroup,
}

pub fn kernels(pair: &ArcPair, x: Point, y: Point) -> Result<Kernels> {
    pair.check_edge(x, y)?;
    let stabilizer_x = pair.group.point_stabilizer(x)?;
    let stabilizer_xy = pair.group.pointwise_stabilizer(&[x, y])?;
    let edge_stabilizer = pair.group.setwise_stabilizer(&[x, y])?;
    let kernel_x = induced_action(&stabilizer_x, pair.neighbourhood(x))?.kernel;
    let mut ball: Vec<Point> = vec![x, y];
    ball.extend(pair.neighbourhood(x));
    ball.extend(pair.neighbourhood(y));
    ball.sort_unstable();
    ball.dedup();
    let kernel_xy = induced_action(&stabilizer_xy, &ball)?.kernel;
    Ok(Kernels {
        x,
        y,
        stabilizer_x,
        stabilizer_xy,
        edge_stabilizer,
        kernel_x,
        kernel_xy,
    })
}

/// The semiregular normal subgroups of the local action, as preimages in `G_x`.
pub(crate) fn semiregular_preimages(h: &LocalHypothesis) -> Result<Vec<PermGroup>> {
    h.lattice
        .members
        .iter()
        .filter(|m| is_semiregular(m))
        .map(|m| h.local.hom().preimage(m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cayley_f16_quintic, complete, complete_bipartite, heawood, tutte_coxeter};
    use crate::perm::Permutation;

    #[test]
    fn arc_transitivity() {
        let k4 = ArcPair::from_fixture(&complete(4).unwrap()).unwrap();
        assert_eq!(k4.valency, 3);
        let h = ArcPair::from_fixture(&heawood()).unwrap();
        assert_eq!(h.arcs, 42);
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let flip = PermGroup::new(3, vec![Permutation::from_cycles(3, &[&[0, 2]]).unwrap()]).unwrap();
        assert!(check_arc_transitive(&path, &flip).is_err());
    }

    #[test]
    fn local_actions_of_fixtures() {
        let h = local_hypothesis(&ArcPair::from_fixture(&heawood()).unwrap()).unwrap();
        assert_eq!(h.local.image.order(), 6);
        assert!(h.holds());
        assert_eq!(h.regular_nilpotent.unwrap().order(), 3);
        let f = local_hypothesis(&ArcPair::from_fixture(&cayley_f16_quintic()).unwrap()).unwrap();
        assert_eq!(f.local.image.order(), 20);
        assert!(f.local.kernel.is_trivial());
        assert_eq!(f.regular_nilpotent.unwrap().order(), 5);
        let b = local_hypothesis(&ArcPair::from_fixture(&complete_bipartite(3).unwrap()).unwrap()).unwrap();
        assert!(b.holds());
    }

    #[test]
    fn kernel_orders() {
        let pair = ArcPair::from_fixture(&heawood()).unwrap();
        let (x, y) = pair.default_edge();
        let k = kernels(&pair, x, y).unwrap();
        assert_eq!(k.stabilizer_x.order(), 24);
        assert_eq!(k.kernel_x.order(), 4);
        assert_eq!(k.stabilizer_xy.order(), 8);
        assert_eq!(k.kernel_xy.order(), 2);
        assert_eq!(k.edge_stabilizer.order(), 16);
        let pair = ArcPair::from_fixture(&tutte_coxeter()).unwrap();
        let (x, y) = pair.default_edge();
        let k = kernels(&pair, x, y).unwrap();
        assert_eq!(k.stabilizer_x.order(), 48);
        assert_eq!(k.kernel_x.order(), 8);
        assert_eq!(k.kernel_xy.order(), 4);
        assert!(kernels(&pair, 0, 0).is_err());
    }
}
