//! Players, vertex sets, dependency graphs and cuts.
//!
//! A [`PlayerSet`] is a bitmask over the vertex order of one
//! [`DependencyGraph`]; it carries no names, so it is only meaningful
//! together with the graph that produced it.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of players a graph may declare (one bit per player).
pub const MAX_VERTICES: usize = 64;

/// Keyword reserved by the formula grammar.
pub(crate) const RESERVED: &str = "false";

/// A player name: ASCII letter followed by letters, digits or underscores.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(String);

impl PlayerId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_identifier(&name) && name != RESERVED {
            Ok(PlayerId(name))
        } else {
            Err(Error::InvalidPlayerName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A set of players of one graph, stored as a bitmask indexed by
/// declaration order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerSet(u64);

impl PlayerSet {
    pub const EMPTY: PlayerSet = PlayerSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PlayerSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        PlayerSet(1 << index)
    }

    /// The first `n` vertices.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PlayerSet(u64::MAX)
        } else {
            PlayerSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn with(self, index: usize) -> Self {
        PlayerSet(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Self {
        PlayerSet(self.0 & !(1 << index))
    }

    pub fn union(self, other: Self) -> Self {
        PlayerSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PlayerSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PlayerSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Member indices in ascending (declaration) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for PlayerSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = PlayerSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

/// Undirected simple graph over the players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyGraph {
    vertices: Vec<PlayerId>,
    index: HashMap<String, usize>,
    /// Normalised as `(lower index, higher index)`.
    edges: BTreeSet<(usize, usize)>,
    neighbours: Vec<PlayerSet>,
}

impl DependencyGraph {
    pub fn new(vertices: Vec<PlayerId>) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                count: vertices.len(),
                max: MAX_VERTICES,
            });
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.0.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate player `{v}`")));
            }
        }
        let neighbours = vec![PlayerSet::EMPTY; vertices.len()];
        Ok(DependencyGraph {
            vertices,
            index,
            edges: BTreeSet::new(),
            neighbours,
        })
    }

    /// Builds a graph from player names and edges given by name.
    pub fn from_names(players: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let ids = players
            .iter()
            .map(|p| PlayerId::new(*p))
            .collect::<Result<Vec<_>>>()?;
        let mut graph = DependencyGraph::new(ids)?;
        for (u, w) in edges {
            let u = graph.index_of(u)?;
            let w = graph.index_of(w)?;
            graph.add_edge(u, w)?;
        }
        Ok(graph)
    }

    pub fn add_edge(&mut self, u: usize, w: usize) -> Result<()> {
        let n = self.len();
        if u >= n || w >= n {
            return Err(Error::InvalidGraph(format!("edge endpoint out of range ({u}, {w})")));
        }
        if u == w {
            return Err(Error::InvalidGraph(format!("loop at `{}`", self.vertices[u])));
        }
        let key = (u.min(w), u.max(w));
        if !self.edges.insert(key) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {} {}",
                self.vertices[key.0], self.vertices[key.1]
            )));
        }
        self.neighbours[u].insert(w);
        self.neighbours[w].insert(u);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[PlayerId] {
        &self.vertices
    }

    pub fn name(&self, index: usize) -> &str {
        self.vertices[index].as_str()
    }

    /// Edges as index pairs `(u, w)` with `u < w`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.neighbours[u].contains(w)
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownPlayer(name.to_string()))
    }

    pub fn all(&self) -> PlayerSet {
        PlayerSet::full(self.len())
    }

    /// Players by name; any unknown name is an input error.
    pub fn set_of(&self, names: &[&str]) -> Result<PlayerSet> {
        names.iter().map(|n| self.index_of(n)).collect()
    }

    pub fn names_of(&self, set: PlayerSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Comma-joined names in declaration order; `{}` for the empty set.
    pub fn format_set(&self, set: PlayerSet) -> String {
        if set.is_empty() {
            "{}".to_string()
        } else {
            self.names_of(set).join(",")
        }
    }

    /// Like [`format_set`](Self::format_set) but always braced: `{a,b}`.
    pub fn format_braced(&self, set: PlayerSet) -> String {
        format!("{{{}}}", self.names_of(set).join(","))
    }

    pub(crate) fn check_set(&self, set: PlayerSet) -> Result<()> {
        let extra = set.difference(self.all());
        match extra.iter().next() {
            Some(i) => Err(Error::UnknownPlayer(format!("#{i}"))),
            None => Ok(()),
        }
    }

    pub fn neighbours(&self, v: usize) -> PlayerSet {
        self.neighbours[v]
    }

    /// The player together with everyone adjacent to it.
    pub fn adj_plus(&self, v: usize) -> PlayerSet {
        self.neighbours[v].with(v)
    }

    /// Members of `region` with at least one neighbour outside it.
    pub fn border(&self, region: PlayerSet) -> PlayerSet {
        let outside = self.all().difference(region);
        region
            .iter()
            .filter(|&v| !self.neighbours[v].intersection(outside).is_empty())
            .collect()
    }

    /// Checked variant of [`border`](Self::border).
    pub fn try_border(&self, region: PlayerSet) -> Result<PlayerSet> {
        self.check_set(region)?;
        Ok(self.border(region))
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.neighbours[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A partition of the vertex set into `left` (U) and `right` (W).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cut {
    left: PlayerSet,
    right: PlayerSet,
}

impl Cut {
    pub fn new(graph: &DependencyGraph, left: PlayerSet, right: PlayerSet) -> Result<Self> {
        graph.check_set(left)?;
        graph.check_set(right)?;
        if !left.intersection(right).is_empty() {
            return Err(Error::InvalidCut(format!(
                "sides overlap on {}",
                graph.format_braced(left.intersection(right))
            )));
        }
        let missing = graph.all().difference(left.union(right));
        if !missing.is_empty() {
            return Err(Error::InvalidCut(format!(
                "{} on neither side",
                graph.format_braced(missing)
            )));
        }
        Ok(Cut { left, right })
    }

    /// The cut whose left side is `left` and right side its complement.
    pub fn from_left(graph: &DependencyGraph, left: PlayerSet) -> Result<Self> {
        graph.check_set(left)?;
        Ok(Cut {
            left,
            right: graph.all().difference(left),
        })
    }

    pub fn left(&self) -> PlayerSet {
        self.left
    }

    pub fn right(&self) -> PlayerSet {
        self.right
    }

    /// `border(U) ∪ border(W)`.
    pub fn divider(&self, graph: &DependencyGraph) -> PlayerSet {
        graph.border(self.left).union(graph.border(self.right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> DependencyGraph {
        DependencyGraph::from_names(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    fn gamma5() -> DependencyGraph {
        DependencyGraph::from_names(
            &["a", "b", "c", "d", "e", "f"],
            &[("d", "e"), ("e", "f"), ("d", "f"), ("a", "d"), ("b", "e"), ("c", "f")],
        )
        .unwrap()
    }

    #[test]
    fn border_of_path_prefix() {
        let g = path4();
        assert_eq!(g.border(g.set_of(&["a", "b"]).unwrap()), g.set_of(&["b"]).unwrap());
        assert_eq!(g.border(g.all()), PlayerSet::EMPTY);
        assert_eq!(g.border(PlayerSet::EMPTY), PlayerSet::EMPTY);
    }

    #[test]
    fn border_in_gamma5() {
        let g = gamma5();
        assert_eq!(g.border(g.set_of(&["c", "f"]).unwrap()), g.set_of(&["f"]).unwrap());
        assert_eq!(
            g.border(g.set_of(&["a", "b", "d", "e"]).unwrap()),
            g.set_of(&["d", "e"]).unwrap()
        );
    }

    #[test]
    fn border_rejects_foreign_players() {
        let g = path4();
        assert!(matches!(g.try_border(PlayerSet::from_bits(1 << 7)), Err(Error::UnknownPlayer(_))));
        assert!(matches!(g.set_of(&["z"]), Err(Error::UnknownPlayer(_))));
    }

    #[test]
    fn closed_neighbourhoods() {
        let g = path4();
        assert_eq!(g.adj_plus(1), g.set_of(&["a", "b", "c"]).unwrap());
        let g5 = gamma5();
        let f = g5.index_of("f").unwrap();
        assert_eq!(g5.adj_plus(f), g5.set_of(&["c", "d", "e", "f"]).unwrap());
        let lone = DependencyGraph::from_names(&["v"], &[]).unwrap();
        assert_eq!(lone.adj_plus(0), PlayerSet::singleton(0));
    }

    #[test]
    fn graph_rejects_loops_and_duplicates() {
        assert!(DependencyGraph::from_names(&["a", "b"], &[("a", "a")]).is_err());
        assert!(DependencyGraph::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(DependencyGraph::from_names(&["a", "a"], &[]).is_err());
        assert!(PlayerId::new("1a").is_err());
        assert!(PlayerId::new("false").is_err());
        assert!(PlayerId::new("x_1").is_ok());
    }

    #[test]
    fn cut_validation() {
        let g = path4();
        let ab = g.set_of(&["a", "b"]).unwrap();
        let cd = g.set_of(&["c", "d"]).unwrap();
        let cut = Cut::new(&g, ab, cd).unwrap();
        assert_eq!(cut.divider(&g), g.set_of(&["b", "c"]).unwrap());
        assert!(Cut::new(&g, ab, g.set_of(&["d"]).unwrap()).is_err());
        assert!(Cut::new(&g, ab, g.set_of(&["b", "c", "d"]).unwrap()).is_err());
    }

    #[test]
    fn bfs_distances() {
        let g = path4();
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        let split = DependencyGraph::from_names(&["a", "b"], &[]).unwrap();
        assert_eq!(split.distances_from(0), vec![Some(0), None]);
    }
}
