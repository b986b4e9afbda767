//! Zero-divisor structure of the general 2^n-ions for a fixed strut
//! constant: assessor lists, the zero-divisor graph, box-kite search, pathion
//! lifts, trip-sync sweeps and census counts.
//!
//! A box-kite here is an induced octahedron of the zero-divisor graph whose
//! three antipodal pairs are struts (low indices XOR to `s`) and whose
//! faces include trips of low indices (the sails). Without the last
//! condition the graph for `n = 5, s <= 8` holds 35 octahedra rather than 7.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::kite::{assessors_for_strut, edge_sign, Assessor, BoxKite, EdgeSign, Sail};
use crate::lariat::{trip_sync_report, SyncTrip};
use crate::Result;

/// All assessors for one `(n, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmanationContext {
    n: u32,
    s: u32,
    assessors: Vec<Assessor>,
}

impl EmanationContext {
    pub fn new(n: u32, s: u32) -> Result<Self> {
        Ok(EmanationContext { n, s, assessors: assessors_for_strut(n, s)? })
    }

    pub fn dim_exponent(&self) -> u32 {
        self.n
    }

    pub fn strut_constant(&self) -> u32 {
        self.s
    }

    /// `2^(n-1) + s`, the shared inner XOR.
    pub fn excess(&self) -> u32 {
        (1 << (self.n - 1)) + self.s
    }

    pub fn assessors(&self) -> &[Assessor] {
        &self.assessors
    }

    /// Strut partner pairs `(o, o xor s)` with `o < o xor s`.
    pub fn struts(&self) -> Vec<(Assessor, Assessor)> {
        let by_low: BTreeMap<u32, Assessor> = self.assessors.iter().map(|a| (a.low(), *a)).collect();
        by_low
            .iter()
            .filter(|(&low, _)| low < low ^ self.s)
            .filter_map(|(&low, &a)| by_low.get(&(low ^ self.s)).map(|&b| (a, b)))
            .collect()
    }
}

/// The `2^(n-1) - 2` assessors of strut constant `s`, ascending by low index.
pub fn emanation_assessors(n: u32, s: u32) -> Result<Vec<Assessor>> {
    assessors_for_strut(n, s)
}

/// Assessors joined by signed edges wherever some diagonal pairing
/// zero-divides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    context: EmanationContext,
    edges: BTreeMap<(usize, usize), EdgeSign>,
}

impl ZdGraph {
    pub fn context(&self) -> &EmanationContext {
        &self.context
    }

    pub fn vertices(&self) -> &[Assessor] {
        &self.context.assessors
    }

    pub fn vertex_count(&self) -> usize {
        self.context.assessors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(i, j, sign)` with `i < j`, indices into [`ZdGraph::vertices`].
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeSign)> + '_ {
        self.edges.iter().map(|(&(i, j), &s)| (i, j, s))
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<EdgeSign> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.get(&key).copied()
    }

    fn index_of(&self, a: &Assessor) -> Option<usize> {
        self.context.assessors.iter().position(|x| x == a)
    }

    /// Number of induced octahedra: three disjoint non-adjacent pairs with
    /// all twelve cross pairs adjacent. No strut or sail condition applied.
    pub fn octahedron_count(&self) -> usize {
        let v = self.vertex_count();
        let gaps: Vec<(usize, usize)> = (0..v)
            .flat_map(|i| ((i + 1)..v).map(move |j| (i, j)))
            .filter(|&(i, j)| self.edge(i, j).is_none())
            .collect();
        let cross = |p: (usize, usize), q: (usize, usize)| {
            [p.0, p.1].iter().all(|&x| [q.0, q.1].iter().all(|&y| x != y && self.edge(x, y).is_some()))
        };
        let mut count = 0;
        for (a, &p) in gaps.iter().enumerate() {
            for (b, &q) in gaps.iter().enumerate().skip(a + 1) {
                if !cross(p, q) {
                    continue;
                }
                count += gaps[b + 1..].iter().filter(|&&r| cross(p, r) && cross(q, r)).count();
            }
        }
        count
    }
}

/// Builds the zero-divisor graph for `(n, s)`, testing both orientation
/// pairings of every assessor pair.
pub fn zd_graph(n: u32, s: u32) -> Result<ZdGraph> {
    let context = EmanationContext::new(n, s)?;
    let v = &context.assessors;
    let mut edges = BTreeMap::new();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if let Some(sign) = edge_sign(&v[i], &v[j])? {
                edges.insert((i, j), sign);
            }
        }
    }
    Ok(ZdGraph { context, edges })
}

/// Every box-kite of `(n, s)`, canonically labeled and sorted by vertex set.
pub fn find_box_kites(n: u32, s: u32) -> Result<Vec<BoxKite>> {
    box_kites_in(&zd_graph(n, s)?)
}

/// Box-kite search over an already built graph.
pub fn box_kites_in(graph: &ZdGraph) -> Result<Vec<BoxKite>> {
    let (n, s) = (graph.context.n, graph.context.s);
    let struts: Vec<((Assessor, Assessor), (usize, usize))> = graph
        .context
        .struts()
        .into_iter()
        .filter_map(|(a, b)| {
            let ids = (graph.index_of(&a)?, graph.index_of(&b)?);
            graph.edge(ids.0, ids.1).is_none().then_some(((a, b), ids))
        })
        .collect();
    let linked = |p: (usize, usize), q: (usize, usize)| {
        [p.0, p.1].iter().all(|&x| [q.0, q.1].iter().all(|&y| graph.edge(x, y).is_some()))
    };
    let mut kites = Vec::new();
    for i in 0..struts.len() {
        for j in (i + 1)..struts.len() {
            if !linked(struts[i].1, struts[j].1) {
                continue;
            }
            for k in (j + 1)..struts.len() {
                let (p, q, r) = (struts[i], struts[j], struts[k]);
                if !linked(p.1, r.1) || !linked(q.1, r.1) {
                    continue;
                }
                // a sail exists iff some choice of ends has low XOR 0, which
                // for strut partners means p xor q xor r is 0 or s
                let x = p.0 .0.low() ^ q.0 .0.low() ^ r.0 .0.low();
                if x != 0 && x != s {
                    continue;
                }
                kites.push(BoxKite::from_struts(n, s, [p.0, q.0, r.0])?);
            }
        }
    }
    kites.sort_by_key(|k| k.vertex_set());
    Ok(kites)
}

/// Lifts a box-kite one doubling up by adding `2^(n-1)` to each high index.
pub fn pathion_lift(bk: &BoxKite) -> Result<BoxKite> {
    bk.lift()
}

/// Trip-sync outcome for one box-kite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub n: u32,
    pub s: u32,
    /// Vertices `A..F` as `(low, high)`.
    pub vertices: Vec<(u32, u32)>,
    pub zigzag_sails: usize,
    pub holds: bool,
    /// Trips contradicting the predicted orientation, with their sail.
    pub counterexamples: Vec<(Sail, SyncTrip)>,
}

/// Trip-sync results over every box-kite of the swept strut constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub n: u32,
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn kite_count(&self) -> usize {
        self.entries.len()
    }

    pub fn pass_count(&self) -> usize {
        self.entries.iter().filter(|e| e.holds).count()
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    /// `(s, kites, passing)` per strut constant.
    pub fn per_strut(&self) -> Vec<(u32, usize, usize)> {
        let mut map: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for e in &self.entries {
            let slot = map.entry(e.s).or_default();
            slot.0 += 1;
            slot.1 += usize::from(e.holds);
        }
        map.into_iter().map(|(s, (k, p))| (s, k, p)).collect()
    }
}

/// Runs the trip-sync check on every box-kite found for each `s`. Strut
/// constants are processed in parallel; results are ordered by `s`, then
/// by vertex set.
pub fn trip_sync_sweep(n: u32, struts: &[u32]) -> Result<SweepReport> {
    let mut struts = struts.to_vec();
    struts.sort_unstable();
    struts.dedup();
    let per_s: Vec<Vec<SweepEntry>> = struts
        .par_iter()
        .map(|&s| -> Result<Vec<SweepEntry>> {
            find_box_kites(n, s)?
                .iter()
                .map(|bk| {
                    let report = trip_sync_report(bk)?;
                    let counterexamples = report
                        .sails
                        .iter()
                        .flat_map(|sail| sail.counterexamples().into_iter().map(move |t| (sail.sail, t)))
                        .collect();
                    Ok(SweepEntry {
                        n,
                        s,
                        vertices: report.vertices.clone(),
                        zigzag_sails: bk.zigzag_sail_count(),
                        holds: report.holds(),
                        counterexamples,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport { n, entries: per_s.into_iter().flatten().collect() })
}

/// Box-kite counts per strut constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: u32,
    pub per_strut: Vec<(u32, usize)>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.per_strut.iter().map(|&(_, c)| c).sum()
    }

    pub fn count(&self, s: u32) -> Option<usize> {
        self.per_strut.iter().find(|&&(x, _)| x == s).map(|&(_, c)| c)
    }
}

/// Enumerates box-kites for every strut constant `0 < s < 2^(n-1)`.
pub fn census(n: u32) -> Result<Census> {
    crate::kite::assessors_for_strut(n, 1)?;
    let struts: Vec<u32> = (1..(1u32 << (n - 1))).collect();
    let per_strut = struts.par_iter().map(|&s| Ok((s, find_box_kites(n, s)?.len()))).collect::<Result<Vec<_>>>()?;
    Ok(Census { n, per_strut })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::{build_box_kite, Vertex};

    fn lows(bk: &BoxKite) -> Vec<u32> {
        Vertex::ALL.iter().map(|&v| bk.vertex(v).low()).collect()
    }

    #[test]
    fn pathion_assessor_list() {
        let got: Vec<(u32, u32)> = emanation_assessors(5, 1).unwrap().iter().map(|a| (a.low(), a.high())).collect();
        assert_eq!(got.len(), 14);
        assert_eq!(got[0], (2, 19));
        assert_eq!(got[1], (3, 18));
        assert_eq!(got[13], (15, 30));
        assert!(got.iter().all(|&(o, h)| o ^ h == 17));
        let nine = emanation_assessors(5, 9).unwrap();
        assert!(nine.iter().any(|a| (a.low(), a.high()) == (8, 17)));
        assert!(nine.iter().any(|a| (a.low(), a.high()) == (1, 24)));
        assert!(emanation_assessors(5, 16).is_err());
    }

    #[test]
    fn sedenion_graph_is_an_octahedron() {
        let g = zd_graph(4, 1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.octahedron_count(), 1);
    }

    #[test]
    fn pathion_counts() {
        assert_eq!(find_box_kites(5, 1).unwrap().len(), 7);
        assert_eq!(find_box_kites(5, 9).unwrap().len(), 3);
        // the bare graph count ignores the sail condition
        assert_eq!(zd_graph(5, 1).unwrap().octahedron_count(), 35);
        assert_eq!(zd_graph(5, 9).unwrap().octahedron_count(), 3);
    }

    #[test]
    fn base_line_and_lift() {
        let kites = find_box_kites(5, 1).unwrap();
        let lifted = pathion_lift(&build_box_kite(1).unwrap()).unwrap();
        assert_eq!(lows(&lifted), vec![3, 6, 5, 4, 7, 2]);
        assert_eq!(lifted.vertex(Vertex::A), Assessor::new(5, 3, 18).unwrap());
        assert_eq!(lifted.vertex(Vertex::B), Assessor::new(5, 6, 23).unwrap());
        assert!(kites.contains(&lifted));
    }

    #[test]
    fn sweep_is_order_independent() {
        let a = trip_sync_sweep(5, &[9, 1, 4]).unwrap();
        let b = trip_sync_sweep(5, &[4, 9, 1, 1]).unwrap();
        assert_eq!(a, b);
        assert!(a.all_hold());
        assert_eq!(a.per_strut(), vec![(1, 7, 7), (4, 7, 7), (9, 3, 3)]);
    }

    #[test]
    fn sedenion_census() {
        let c = census(4).unwrap();
        assert_eq!(c.total(), 7);
        assert!(c.per_strut.iter().all(|&(_, k)| k == 1));
    }
}
