use std::fmt;

use super::assessor::{assessors_for_strut, edge_sign, is_zero_divisor_pair, Assessor, Diagonal, EdgeSign};
use crate::algebra::blade_sign;
use crate::{Error, Result};

/// Vertex slot of a box-kite octahedron. Struts join A-F, B-E and C-D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Vertex {
    pub const ALL: [Vertex; 6] = [Vertex::A, Vertex::B, Vertex::C, Vertex::D, Vertex::E, Vertex::F];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The vertex at the other end of this vertex's strut.
    pub fn strut_partner(self) -> Vertex {
        Vertex::ALL[5 - self.index()]
    }

    pub fn letter(self) -> char {
        (b'A' + self as u8) as char
    }

    pub fn from_letter(c: char) -> Option<Vertex> {
        let i = (c.to_ascii_uppercase() as u8).checked_sub(b'A')?;
        Vertex::ALL.get(i as usize).copied()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The three struts, named by their vertex pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strut {
    AF,
    BE,
    CD,
}

impl Strut {
    pub const ALL: [Strut; 3] = [Strut::AF, Strut::BE, Strut::CD];

    /// `(upper-half-alphabet vertex, lower-half-alphabet vertex)`, e.g. `(F, A)`.
    pub fn ends(self) -> (Vertex, Vertex) {
        match self {
            Strut::AF => (Vertex::F, Vertex::A),
            Strut::BE => (Vertex::E, Vertex::B),
            Strut::CD => (Vertex::D, Vertex::C),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strut::AF => "A-F",
            Strut::BE => "B-E",
            Strut::CD => "C-D",
        }
    }

    pub fn parse(text: &str) -> Option<Strut> {
        let letters: String =
            text.chars().filter(|c| c.is_ascii_alphabetic()).map(|c| c.to_ascii_uppercase()).collect();
        match letters.as_str() {
            "AF" | "FA" => Some(Strut::AF),
            "BE" | "EB" => Some(Strut::BE),
            "CD" | "DC" => Some(Strut::CD),
            _ => None,
        }
    }
}

/// The twelve octahedron edges, each as `(lower, higher)` vertex.
pub const EDGES: [(Vertex, Vertex); 12] = {
    use Vertex::*;
    [(A, B), (A, C), (A, D), (A, E), (B, C), (B, D), (B, F), (C, E), (C, F), (D, E), (D, F), (E, F)]
};

/// One of the four zero-divisor carrying triangles, with its vertices in
/// slot order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sail {
    pub vertices: [Vertex; 3],
}

impl Sail {
    pub const ABC: Sail = Sail { vertices: [Vertex::A, Vertex::B, Vertex::C] };
    pub const ADE: Sail = Sail { vertices: [Vertex::A, Vertex::D, Vertex::E] };
    pub const FCE: Sail = Sail { vertices: [Vertex::F, Vertex::C, Vertex::E] };
    pub const FDB: Sail = Sail { vertices: [Vertex::F, Vertex::D, Vertex::B] };

    /// Synchronization-table column order.
    pub const ALL: [Sail; 4] = [Sail::ABC, Sail::ADE, Sail::FCE, Sail::FDB];

    pub fn name(&self) -> String {
        self.vertices.iter().map(|v| v.letter()).collect()
    }

    pub fn parse(text: &str) -> Option<Sail> {
        Sail::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(text))
    }

    /// Edges in cycle order: `(v0, v1)`, `(v1, v2)`, `(v2, v0)`.
    pub fn edges(&self) -> [(Vertex, Vertex); 3] {
        let [x, y, z] = self.vertices;
        [(x, y), (y, z), (z, x)]
    }
}

impl fmt::Display for Sail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Zigzag sails carry three `-` edges; trefoils exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SailKind {
    Zigzag,
    Trefoil,
}

/// Six assessors on an octahedron whose twelve edges zero-divide and whose
/// three struts do not, labeled A-F with computed edge signs.
///
/// The labeling is canonical: `ABC` is a zigzag sail whose octonion (low)
/// parts form a positively oriented trip, rotated to start at the smallest
/// low index; `F, E, D` are the strut partners of `A, B, C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxKite {
    n: u32,
    s: u32,
    vertices: [Assessor; 6],
    edges: [EdgeSign; 12],
    zigzag_sails: usize,
}

impl BoxKite {
    /// Assembles a box-kite from three strut pairs, computing every edge sign
    /// from products and choosing the canonical labeling.
    pub fn from_struts(n: u32, s: u32, struts: [(Assessor, Assessor); 3]) -> Result<BoxKite> {
        let not_kite = |why: String| Error::NotABoxKite(why);
        let flat: Vec<Assessor> = struts.iter().flat_map(|&(p, q)| [p, q]).collect();
        for a in &flat {
            if a.dim_exponent() != n || a.strut_constant() != s {
                return Err(not_kite(format!("assessor {a} does not belong to (n={n}, s={s})")));
            }
        }
        for &(p, q) in &struts {
            if p.low() ^ q.low() != s {
                return Err(not_kite(format!("{p} and {q} are not strut partners")));
            }
            if edge_sign(&p, &q)?.is_some() {
                return Err(not_kite(format!("strut {p}-{q} zero-divides")));
            }
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                for p in [struts[i].0, struts[i].1] {
                    for q in [struts[j].0, struts[j].1] {
                        if edge_sign(&p, &q)?.is_none() {
                            return Err(not_kite(format!("{p} and {q} do not zero-divide")));
                        }
                    }
                }
            }
        }

        // Faces pick one end of each strut; sails are faces whose low parts
        // form a trip. Either all four alternate faces qualify or none does.
        let mut sails = Vec::new();
        for mask in 0..8u32 {
            let face: Vec<Assessor> =
                (0..3).map(|k| if mask >> k & 1 == 0 { struts[k].0 } else { struts[k].1 }).collect();
            if face[0].low() ^ face[1].low() ^ face[2].low() == 0 {
                sails.push([face[0], face[1], face[2]]);
            }
        }
        if sails.len() != 4 {
            return Err(not_kite(format!("{} faces form trips, expected 4", sails.len())));
        }

        let partner = |a: Assessor| {
            struts
                .iter()
                .find_map(|&(p, q)| {
                    if p == a {
                        Some(q)
                    } else if q == a {
                        Some(p)
                    } else {
                        None
                    }
                })
                .unwrap()
        };
        let mut zigzag_sails = 0;
        let mut best: Option<[Assessor; 6]> = None;
        for sail in &sails {
            let zigzag = (0..3).all(|k| matches!(edge_sign(&sail[k], &sail[(k + 1) % 3]), Ok(Some(EdgeSign::Minus))));
            if !zigzag {
                continue;
            }
            zigzag_sails += 1;
            // positively oriented rotation starting at the smallest low index
            let mut abc = *sail;
            abc.sort_by_key(|a| a.low());
            if !blade_sign(abc[0].low(), abc[1].low()).is_plus() {
                abc.swap(1, 2);
            }
            let labeled = [abc[0], abc[1], abc[2], partner(abc[2]), partner(abc[1]), partner(abc[0])];
            let key = |l: &[Assessor; 6]| l.map(|a| a.low());
            if best.as_ref().is_none_or(|b| key(&labeled) < key(b)) {
                best = Some(labeled);
            }
        }
        let vertices = best.ok_or_else(|| not_kite("no zigzag sail".into()))?;
        let mut edges = [EdgeSign::Plus; 12];
        for (slot, &(u, v)) in EDGES.iter().enumerate() {
            edges[slot] = edge_sign(&vertices[u.index()], &vertices[v.index()])?.expect("edge presence checked above");
        }
        Ok(BoxKite { n, s, vertices, edges, zigzag_sails })
    }

    /// Rebuilds a box-kite from an explicit labeling and checks that the
    /// labeling is the canonical one.
    pub fn from_labeled(n: u32, s: u32, vertices: [Assessor; 6]) -> Result<BoxKite> {
        let struts = Strut::ALL.map(|st| {
            let (p, q) = st.ends();
            (vertices[q.index()], vertices[p.index()])
        });
        let kite = BoxKite::from_struts(n, s, struts)?;
        if kite.vertices != vertices {
            return Err(Error::NotABoxKite("labeling is not canonical".into()));
        }
        Ok(kite)
    }

    pub fn dim_exponent(&self) -> u32 {
        self.n
    }

    pub fn strut_constant(&self) -> u32 {
        self.s
    }

    pub fn vertex(&self, v: Vertex) -> Assessor {
        self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[Assessor; 6] {
        &self.vertices
    }

    pub fn diagonal(&self, v: Vertex, orientation: super::Orientation) -> Diagonal {
        self.vertex(v).diagonal(orientation)
    }

    /// Which vertex holds `assessor`, if any.
    pub fn slot_of(&self, assessor: &Assessor) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|&v| self.vertex(v) == *assessor)
    }

    /// Edge sign between two vertices; `None` for struts and `u == v`.
    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<EdgeSign> {
        let key = if u < v { (u, v) } else { (v, u) };
        EDGES.iter().position(|&e| e == key).map(|i| self.edges[i])
    }

    /// The twelve edges with their signs, in [`EDGES`] order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, EdgeSign)> + '_ {
        EDGES.iter().zip(self.edges.iter()).map(|(&(u, v), &s)| (u, v, s))
    }

    /// Number of zigzag sails seen while labeling (1 whenever the labeling
    /// is unambiguous).
    pub fn zigzag_sail_count(&self) -> usize {
        self.zigzag_sails
    }

    /// Canonical vertex set, sorted by low index.
    pub fn vertex_set(&self) -> Vec<(u32, u32)> {
        let mut set: Vec<_> = self.vertices.iter().map(|a| (a.low(), a.high())).collect();
        set.sort();
        set
    }

    /// `ABC` and `DEF` carry `-` edges, the other six carry `+`.
    pub fn edge_rule_holds(&self) -> bool {
        use Vertex::*;
        let triangle = |v: Vertex| matches!(v, A | B | C);
        self.edges().all(|(u, v, sign)| {
            let expected = if triangle(u) == triangle(v) { EdgeSign::Minus } else { EdgeSign::Plus };
            sign == expected
        })
    }

    pub fn sail_kind(&self, sail: Sail) -> SailKind {
        let minus = sail.edges().iter().filter(|&&(u, v)| self.edge(u, v) == Some(EdgeSign::Minus)).count();
        if minus == 3 {
            SailKind::Zigzag
        } else {
            SailKind::Trefoil
        }
    }

    /// The same vertices lifted into the 2^(n+1)-ions (`high + 2^(n-1)`).
    pub fn lift(&self) -> Result<BoxKite> {
        let lifted = self.vertices.iter().map(|a| a.lift()).collect::<Result<Vec<_>>>()?;
        let struts = Strut::ALL.map(|st| {
            let (p, q) = st.ends();
            (lifted[q.index()], lifted[p.index()])
        });
        BoxKite::from_struts(self.n + 1, self.s, struts)
    }
}

/// Box-kite `s` of the sedenions.
pub fn build_box_kite(s: u32) -> Result<BoxKite> {
    let assessors = assessors_for_strut(4, s)?;
    let struts: Vec<(Assessor, Assessor)> = assessors
        .iter()
        .filter(|a| a.low() < a.low() ^ s)
        .map(|&a| {
            let partner = *assessors.iter().find(|b| b.low() == a.low() ^ s).expect("strut partner present");
            (a, partner)
        })
        .collect();
    let struts: [(Assessor, Assessor); 3] = struts.try_into().expect("six assessors form three struts");
    BoxKite::from_struts(4, s, struts)
}

/// One step of a zero-divisor circuit: `left * right = 0`.
pub type ZeroProduct = (Diagonal, Diagonal);

/// Walks a sail starting from `start`, keeping the diagonal orientation on
/// `+` edges and flipping it on `-` edges. Returns the six zero products of
/// the closed circuit.
pub fn sail_six_cycle(bk: &BoxKite, sail: Sail, start: Diagonal) -> Result<Vec<ZeroProduct>> {
    let not_on_sail = || Error::NotOnSail { low: start.assessor.low(), high: start.assessor.high() };
    let first = bk.slot_of(&start.assessor).ok_or_else(not_on_sail)?;
    let offset = sail.vertices.iter().position(|&v| v == first).ok_or_else(not_on_sail)?;
    circuit(bk, &sail.vertices, offset, start, 6)
}

fn circuit(bk: &BoxKite, cycle: &[Vertex], offset: usize, start: Diagonal, steps: usize) -> Result<Vec<ZeroProduct>> {
    let len = cycle.len();
    let mut out = Vec::with_capacity(steps);
    let mut current = start;
    for k in 0..steps {
        let here = cycle[(offset + k) % len];
        let next = cycle[(offset + k + 1) % len];
        let sign = bk.edge(here, next).ok_or(Error::NotABoxKite(format!("{here}{next} is not an edge")))?;
        let following = bk.diagonal(next, current.orientation.across(sign));
        if !is_zero_divisor_pair(&current, &following)? {
            return Err(Error::NotABoxKite(format!("{current} * {following} is not zero")));
        }
        out.push((current, following));
        current = following;
    }
    debug_assert_eq!(current, start);
    Ok(out)
}

/// Orientation glyphs of the left factors along a circuit, e.g. `/\/\/\`.
pub fn orientation_pattern(cycle: &[ZeroProduct]) -> String {
    cycle.iter().map(|(d, _)| d.orientation.glyph()).collect()
}

/// A square of the octahedron (two struts) traversed as a 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrayRack {
    /// The strut orthogonal to the square.
    pub axis: Strut,
    pub vertices: [Vertex; 4],
    /// `signs[k]` labels the edge from `vertices[k]` to `vertices[k + 1]`.
    pub signs: [EdgeSign; 4],
}

impl TrayRack {
    /// Compact form like `B-C+E-D+`.
    pub fn notation(&self) -> String {
        self.vertices.iter().zip(self.signs.iter()).map(|(v, s)| format!("{v}{s}")).collect()
    }

    /// The same circuit with every edge sign toggled.
    pub fn toggled(&self) -> TrayRack {
        TrayRack { signs: self.signs.map(EdgeSign::toggled), ..self.clone() }
    }

    /// Zero products around the square starting from `start` (4 steps).
    pub fn circuit(&self, bk: &BoxKite, start: Diagonal) -> Result<Vec<ZeroProduct>> {
        let first = bk.slot_of(&start.assessor);
        let offset = self
            .vertices
            .iter()
            .position(|&v| Some(v) == first)
            .ok_or(Error::NotOnSail { low: start.assessor.low(), high: start.assessor.high() })?;
        circuit(bk, &self.vertices, offset, start, 4)
    }
}

/// The three tray-racks, one per strut axis (A-F, B-E, C-D). Each starts at
/// its alphabetically first vertex and steps to the nearer-lettered
/// neighbor.
pub fn tray_racks(bk: &BoxKite) -> Result<[TrayRack; 3]> {
    let racks = Strut::ALL.map(|axis| {
        let (p, q) = axis.ends();
        let mut square: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&v| v != p && v != q).collect();
        square.sort();
        let v0 = square[0];
        let opposite = v0.strut_partner();
        let mut side: Vec<Vertex> = square.iter().copied().filter(|&v| v != v0 && v != opposite).collect();
        side.sort();
        let vertices = [v0, side[0], opposite, side[1]];
        let signs = [0, 1, 2, 3].map(|k| bk.edge(vertices[k], vertices[(k + 1) % 4]).expect("square edge"));
        TrayRack { axis, vertices, signs }
    });
    for rack in &racks {
        rack.circuit(bk, bk.vertex(rack.vertices[0]).slash())?;
        rack.circuit(bk, bk.vertex(rack.vertices[0]).backslash())?;
    }
    Ok(racks)
}

/// Three-bit code of a sail: one bit per edge in cycle order, `+` = 1,
/// first edge most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trigram(pub u8);

impl Trigram {
    pub fn bits(self) -> String {
        format!("{:03b}", self.0)
    }

    pub fn signs(self) -> String {
        (0..3).rev().map(|k| if self.0 >> k & 1 == 1 { '+' } else { '-' }).collect()
    }
}

/// Sail order used for trigram listings.
pub const TRIGRAM_ORDER: [Sail; 4] = [Sail::ABC, Sail::FDB, Sail::ADE, Sail::FCE];

/// Trigram of every sail in [`TRIGRAM_ORDER`]; `switched` toggles all edge
/// signs first.
pub fn trigram_code(bk: &BoxKite, switched: bool) -> Vec<(Sail, Trigram)> {
    TRIGRAM_ORDER
        .iter()
        .map(|&sail| {
            let code = sail.edges().iter().fold(0u8, |acc, &(u, v)| {
                let sign = bk.edge(u, v).expect("sail edge");
                let sign = if switched { sign.toggled() } else { sign };
                acc << 1 | u8::from(sign == EdgeSign::Plus)
            });
            (sail, Trigram(code))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::Orientation;
    use super::*;

    fn lows(bk: &BoxKite) -> Vec<u32> {
        bk.vertices().iter().map(|a| a.low()).collect()
    }

    #[test]
    fn box_kite_one_labels() {
        let bk = build_box_kite(1).unwrap();
        let pairs: Vec<_> = bk.vertices().iter().map(|a| (a.low(), a.high())).collect();
        assert_eq!(pairs, vec![(3, 10), (6, 15), (5, 12), (4, 13), (7, 14), (2, 11)]);
        assert!(bk.edge_rule_holds());
        assert_eq!(bk.zigzag_sail_count(), 1);
    }

    #[test]
    fn box_kite_four_labels() {
        let bk = build_box_kite(4).unwrap();
        assert_eq!(bk.vertex(Vertex::A), Assessor::new(4, 1, 13).unwrap());
        assert_eq!(bk.vertex(Vertex::F), Assessor::new(4, 5, 9).unwrap());
    }

    #[test]
    fn strut_xors_equal_strut_constant() {
        for s in 1..8 {
            let bk = build_box_kite(s).unwrap();
            for strut in Strut::ALL {
                let (p, q) = strut.ends();
                assert_eq!(bk.vertex(p).low() ^ bk.vertex(q).low(), s);
                assert_eq!(bk.edge(p, q), None);
            }
        }
    }

    #[test]
    fn abc_six_cycle_progression() {
        let bk = build_box_kite(1).unwrap();
        let start = bk.diagonal(Vertex::A, Orientation::Slash);
        let cycle = sail_six_cycle(&bk, Sail::ABC, start).unwrap();
        let rendered: Vec<String> = cycle.iter().map(|(x, y)| format!("{x}{y}")).collect();
        assert_eq!(rendered.first().unwrap(), "(e3 + e10)(e6 - e15)");
        assert_eq!(rendered.last().unwrap(), "(e5 - e12)(e3 + e10)");
        assert_eq!(orientation_pattern(&cycle), "/\\/\\/\\");
    }

    #[test]
    fn trefoil_cycles_do_not_alternate() {
        let bk = build_box_kite(1).unwrap();
        for sail in [Sail::ADE, Sail::FCE, Sail::FDB] {
            assert_eq!(bk.sail_kind(sail), SailKind::Trefoil);
            let start = bk.diagonal(sail.vertices[0], Orientation::Slash);
            let cycle = sail_six_cycle(&bk, sail, start).unwrap();
            assert_eq!(cycle.len(), 6);
            assert_eq!(cycle.last().unwrap().1, start);
            assert_ne!(orientation_pattern(&cycle), "/\\/\\/\\");
        }
        assert_eq!(bk.sail_kind(Sail::ABC), SailKind::Zigzag);
    }

    #[test]
    fn six_cycle_rejects_foreign_start() {
        let bk = build_box_kite(1).unwrap();
        let off = bk.diagonal(Vertex::F, Orientation::Slash);
        assert!(matches!(sail_six_cycle(&bk, Sail::ABC, off), Err(Error::NotOnSail { .. })));
    }

    #[test]
    fn tray_rack_squares() {
        let bk = build_box_kite(1).unwrap();
        let racks = tray_racks(&bk).unwrap();
        let names: Vec<String> = racks.iter().map(TrayRack::notation).collect();
        assert_eq!(names, vec!["B-C+E-D+", "A-C+F-D+", "A-B+F-E+"]);
        for rack in &racks {
            let (p, q) = rack.axis.ends();
            assert!(!rack.vertices.contains(&p) && !rack.vertices.contains(&q));
            let toggled = rack.toggled();
            assert_eq!(toggled.vertices, rack.vertices);
            let mut shifted = rack.signs;
            shifted.rotate_left(1);
            assert_eq!(toggled.signs, shifted);
        }
    }

    #[test]
    fn trigrams() {
        let bk = build_box_kite(1).unwrap();
        let plain: Vec<String> = trigram_code(&bk, false).iter().map(|(_, t)| t.bits()).collect();
        assert_eq!(plain, vec!["000", "011", "101", "110"]);
        let switched: Vec<String> = trigram_code(&bk, true).iter().map(|(_, t)| t.signs()).collect();
        assert_eq!(switched, vec!["+++", "+--", "-+-", "--+"]);
    }

    #[test]
    fn labeled_round_trip() {
        let bk = build_box_kite(6).unwrap();
        let again = BoxKite::from_labeled(4, 6, *bk.vertices()).unwrap();
        assert_eq!(again, bk);
        let mut swapped = *bk.vertices();
        swapped.swap(0, 1);
        assert!(BoxKite::from_labeled(4, 6, swapped).is_err());
        assert_eq!(lows(&bk), vec![3, 4, 7, 1, 2, 5]);
    }
}
