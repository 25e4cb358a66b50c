use super::Graph;
use crate::error::{Error, Result};
use std::fmt;

/// Parameters of the dumbbell graph: cycles `C_p` and `C_q` joined by a path
/// with `k` internal vertices. Always normalized to `p >= q >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DumbbellParams {
    p: usize,
    k: usize,
    q: usize,
}

impl DumbbellParams {
    pub fn new(p: usize, k: usize, q: usize) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidParams(format!(
                "dumbbell cycle lengths must be at least 3, got q = {q}"
            )));
        }
        if p < q {
            return Err(Error::InvalidParams(format!(
                "dumbbell parameters must satisfy p >= q, got p = {p}, q = {q}"
            )));
        }
        Ok(DumbbellParams { p, k, q })
    }

    /// Accepts the two cycle lengths in either order.
    pub fn normalized(a: usize, k: usize, b: usize) -> Result<Self> {
        Self::new(a.max(b), k, a.min(b))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertex_count(&self) -> usize {
        self.p + self.k + self.q
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() + 1
    }
}

impl fmt::Display for DumbbellParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{},{})", self.p, self.k, self.q)
    }
}

/// Parameters of the theta graph: two hubs joined by three internally
/// disjoint paths with `r`, `s`, `t` internal vertices. Normalized to
/// `r >= s >= t`, with `(s, t) != (0, 0)` so the graph is simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaParams {
    r: usize,
    s: usize,
    t: usize,
}

impl ThetaParams {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        if !(r >= s && s >= t) {
            return Err(Error::InvalidParams(format!(
                "theta parameters must satisfy r >= s >= t, got ({r},{s},{t})"
            )));
        }
        if s == 0 {
            return Err(Error::InvalidParams(
                "theta parameters with s = t = 0 would create a multi-edge".into(),
            ));
        }
        Ok(ThetaParams { r, s, t })
    }

    pub fn normalized(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable_by(|x, y| y.cmp(x));
        Self::new(v[0], v[1], v[2])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        self.r + self.s + self.t + 2
    }

    pub fn edge_count(&self) -> usize {
        self.r + self.s + self.t + 3
    }
}

impl fmt::Display for ThetaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theta({},{},{})", self.r, self.s, self.t)
    }
}

/// How a graph was constructed. Raw constructor arguments are kept, so a
/// dumbbell built with its cycles in swapped order records that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Path(usize),
    Cycle(usize),
    Dumbbell {
        first: usize,
        bridge: usize,
        second: usize,
    },
    Theta {
        paths: [usize; 3],
    },
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Path(n) => write!(f, "P({n})"),
            Origin::Cycle(n) => write!(f, "C({n})"),
            Origin::Dumbbell {
                first,
                bridge,
                second,
            } => write!(f, "D({first},{bridge},{second})"),
            Origin::Theta { paths } => write!(f, "Theta({},{},{})", paths[0], paths[1], paths[2]),
        }
    }
}

/// Path on vertices `0..n` with edges `{i, i+1}`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "path needs at least one vertex".into(),
        ));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?.with_origin(Origin::Path(n)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_origin(Origin::Cycle(n)))
}

pub fn make_dumbbell(params: DumbbellParams) -> Graph {
    dumbbell_with_cycles(params.p, params.k, params.q)
        .expect("normalized dumbbell parameters are always constructible")
}

/// Dumbbell with the cycle lengths in the given order.
///
/// Vertex numbering: the first cycle is `0..first` (attached at 0), then the
/// `bridge` internal path vertices, then the second cycle starting at its
/// attachment vertex `first + bridge`.
pub fn dumbbell_with_cycles(first: usize, bridge: usize, second: usize) -> Result<Graph> {
    if first < 3 || second < 3 {
        return Err(Error::InvalidParams(format!(
            "dumbbell cycle lengths must be at least 3, got {first} and {second}"
        )));
    }
    let n = first + bridge + second;
    let mut edges: Vec<(usize, usize)> = (0..first).map(|i| (i, (i + 1) % first)).collect();
    let offset = first + bridge;
    let mut prev = 0;
    for v in first..=offset {
        edges.push((prev, v));
        prev = v;
    }
    edges.extend((0..second).map(|i| (offset + i, offset + (i + 1) % second)));
    Ok(Graph::new(n, edges)?.with_origin(Origin::Dumbbell {
        first,
        bridge,
        second,
    }))
}

pub fn make_theta(params: ThetaParams) -> Graph {
    theta_with_paths(params.r, params.s, params.t)
        .expect("normalized theta parameters are always constructible")
}

/// Theta graph with the three paths in the given order.
///
/// Hubs are vertices 0 and 1; internal vertices of the first path follow
/// from 2, then the second path, then the third.
pub fn theta_with_paths(a: usize, b: usize, c: usize) -> Result<Graph> {
    let paths = [a, b, c];
    if paths.iter().filter(|&&l| l == 0).count() > 1 {
        return Err(Error::InvalidParams(
            "theta graph with two empty paths would create a multi-edge".into(),
        ));
    }
    let n = a + b + c + 2;
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 2;
    for len in paths {
        let mut prev = 0;
        for v in next..next + len {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, 1));
        next += len;
    }
    Ok(Graph::new(n, edges)?.with_origin(Origin::Theta { paths }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BicyclicClass {
    Dumbbell(DumbbellParams),
    Theta(ThetaParams),
    NotInFamily,
}

impl BicyclicClass {
    pub fn in_family(&self) -> bool {
        !matches!(self, BicyclicClass::NotInFamily)
    }
}

impl fmt::Display for BicyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BicyclicClass::Dumbbell(p) => write!(f, "{p}"),
            BicyclicClass::Theta(p) => write!(f, "{p}"),
            BicyclicClass::NotInFamily => f.write_str("not in family"),
        }
    }
}

/// Recognizes connected graphs with degree profile `(3, 3, 2, ..., 2)` and
/// `n + 1` edges as dumbbells (a bridge exists) or thetas (2-edge-connected),
/// recovering normalized parameters.
pub fn classify_bicyclic(g: &Graph) -> BicyclicClass {
    let n = g.n();
    if n < 4 || g.edge_count() != n + 1 || !g.is_connected() {
        return BicyclicClass::NotInFamily;
    }
    let deg = g.degrees();
    let hubs: Vec<usize> = (0..n).filter(|&v| deg[v] == 3).collect();
    if hubs.len() != 2 || deg.iter().any(|&d| d != 2 && d != 3) {
        return BicyclicClass::NotInFamily;
    }
    let adj = g.adjacency();
    let (a, b) = (hubs[0], hubs[1]);

    // Walk from a hub along degree-2 vertices until a hub is reached.
    let branch = |hub: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut internal) = (hub, first, 0);
        while deg[cur] == 2 {
            internal += 1;
            let next = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        (cur, internal)
    };
    let from_a: Vec<(usize, usize)> = adj[a].iter().map(|&w| branch(a, w)).collect();

    let class = if g.bridges().is_empty() {
        if from_a.iter().any(|&(end, _)| end != b) {
            return BicyclicClass::NotInFamily;
        }
        ThetaParams::normalized(from_a[0].1, from_a[1].1, from_a[2].1).map(BicyclicClass::Theta)
    } else {
        let from_b: Vec<(usize, usize)> = adj[b].iter().map(|&w| branch(b, w)).collect();
        let cycle_at = |branches: &[(usize, usize)], hub: usize| {
            let loops: Vec<usize> = branches
                .iter()
                .filter(|&&(end, _)| end == hub)
                .map(|&(_, len)| len + 1)
                .collect();
            let bridge = branches
                .iter()
                .find(|&&(end, _)| end != hub)
                .map(|&(_, l)| l);
            match (loops.as_slice(), bridge) {
                ([x, y], Some(k)) if x == y => Some((*x, k)),
                _ => None,
            }
        };
        match (cycle_at(&from_a, a), cycle_at(&from_b, b)) {
            (Some((pa, ka)), Some((pb, kb))) if ka == kb => {
                DumbbellParams::normalized(pa, ka, pb).map(BicyclicClass::Dumbbell)
            }
            _ => return BicyclicClass::NotInFamily,
        }
    };
    class.unwrap_or(BicyclicClass::NotInFamily)
}
