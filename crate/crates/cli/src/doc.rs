//! Serde shapes for JSON output. Table cells use the signed grammar
//! `0`, `+R`, `-8`, `+A`, `-c`, ...

use std::collections::BTreeMap;

use boxkite_core::emanation::{SweepEntry, SweepReport};
use boxkite_core::kite::{goto_numbers, SailKind};
use boxkite_core::lariat::{QuizzicalLariat, SailSync, TripSyncReport};
use boxkite_core::{Assessor, BoxKite, Cell, Census, EdgeSign, LariatTable, Vertex, ZdGraph};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub sign: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxKiteDoc {
    pub n: u32,
    pub s: u32,
    pub vertices: BTreeMap<String, [u32; 2]>,
    pub struts: Vec<[String; 2]>,
    pub edges: Vec<EdgeDoc>,
    pub zigzag_sails: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goto: Option<[usize; 4]>,
}

fn sign_text(sign: EdgeSign) -> String {
    sign.symbol().to_string()
}

impl BoxKiteDoc {
    pub fn from_kite(bk: &BoxKite) -> Result<Self> {
        let n = bk.dim_exponent();
        let vertices =
            Vertex::ALL.iter().map(|&v| (v.to_string(), [bk.vertex(v).low(), bk.vertex(v).high()])).collect();
        let struts = boxkite_core::Strut::ALL
            .iter()
            .map(|st| {
                let (p, q) = st.ends();
                [q.to_string(), p.to_string()]
            })
            .collect();
        let edges = bk
            .edges()
            .map(|(u, v, sign)| EdgeDoc { from: u.to_string(), to: v.to_string(), sign: sign_text(sign) })
            .collect();
        let goto = if n == 4 { Some(goto_numbers(bk)?) } else { None };
        Ok(BoxKiteDoc {
            n,
            s: bk.strut_constant(),
            vertices,
            struts,
            edges,
            zigzag_sails: bk.zigzag_sail_count(),
            goto,
        })
    }

    /// Rebuilds the kite from its vertex map and checks the recorded edges
    /// against the recomputed ones.
    pub fn to_kite(&self) -> Result<BoxKite> {
        let mut slots = Vec::with_capacity(6);
        for v in Vertex::ALL {
            let [low, high] = *self
                .vertices
                .get(&v.to_string())
                .ok_or_else(|| CliError::usage(format!("vertex {v} missing from box-kite document")))?;
            slots.push(Assessor::new(self.n, low, high)?);
        }
        let bk = BoxKite::from_labeled(self.n, self.s, slots.try_into().expect("six vertices"))?;
        let rebuilt = BoxKiteDoc::from_kite(&bk)?;
        if rebuilt != *self {
            return Err(CliError::usage("box-kite document disagrees with the recomputed structure"));
        }
        Ok(bk)
    }
}

/// A lariat table over explicit row and column symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub n: u32,
    pub s: u32,
    pub symbols: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TableDoc {
    pub fn from_table(bk: &BoxKite, table: &LariatTable) -> Self {
        TableDoc {
            n: bk.dim_exponent(),
            s: bk.strut_constant(),
            symbols: table.symbols().iter().map(|s| s.to_string()).collect(),
            rows: table.rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
        }
    }

    pub fn cells(&self) -> Result<Vec<Vec<Cell>>> {
        self.rows.iter().map(|r| r.iter().map(|c| c.parse::<Cell>().map_err(CliError::Usage)).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MockDoc {
    pub strut: String,
    pub octonion_isomorphic: bool,
    pub table: TableDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrutRowDoc {
    pub name: String,
    pub kite: BoxKiteDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuizzicalDoc {
    pub sail: String,
    pub name: String,
    pub triple: Vec<String>,
    pub squares: Vec<String>,
    pub triple_product: String,
    pub hamilton: bool,
}

impl QuizzicalDoc {
    pub fn from_lariat(q: &QuizzicalLariat) -> Self {
        let squares =
            q.triple.iter().map(|&x| q.table.cell(x, x).map_or_else(|| "?".into(), |c| c.to_string())).collect();
        QuizzicalDoc {
            sail: q.sail.name(),
            name: q.name(),
            triple: q.triple.iter().map(|s| s.to_string()).collect(),
            squares,
            triple_product: q.triple_product.to_string(),
            hamilton: q.satisfies_hamilton(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripDoc {
    pub indices: [u32; 3],
    pub orientation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SailSyncDoc {
    pub sail: String,
    pub kind: String,
    pub holds: bool,
    pub trips: Vec<TripDoc>,
    pub expected: Vec<String>,
}

pub fn kind_name(kind: SailKind) -> &'static str {
    match kind {
        SailKind::Zigzag => "zigzag",
        SailKind::Trefoil => "trefoil",
    }
}

impl SailSyncDoc {
    pub fn from_sync(sync: &SailSync) -> Self {
        SailSyncDoc {
            sail: sync.sail.name(),
            kind: kind_name(sync.kind).into(),
            holds: sync.holds(),
            trips: sync
                .trips
                .iter()
                .map(|t| TripDoc { indices: t.indices, orientation: t.orientation.symbol().to_string() })
                .collect(),
            expected: sync.expected.iter().map(|e| e.symbol().to_string()).collect(),
        }
    }
}

fn vertex_map(vertices: &[(u32, u32)]) -> BTreeMap<String, [u32; 2]> {
    Vertex::ALL.iter().zip(vertices).map(|(v, &(lo, hi))| (v.to_string(), [lo, hi])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyncKiteDoc {
    pub name: String,
    pub s: u32,
    pub vertices: BTreeMap<String, [u32; 2]>,
    pub holds: bool,
    pub sails: Vec<SailSyncDoc>,
}

impl SyncKiteDoc {
    pub fn from_report(name: &str, report: &TripSyncReport) -> Self {
        SyncKiteDoc {
            name: name.into(),
            s: report.s,
            vertices: vertex_map(&report.vertices),
            holds: report.holds(),
            sails: report.sails.iter().map(SailSyncDoc::from_sync).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub sail: String,
    pub indices: [u32; 3],
    pub orientation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntryDoc {
    pub s: u32,
    pub vertices: BTreeMap<String, [u32; 2]>,
    pub zigzag_sails: usize,
    pub holds: bool,
    pub counterexamples: Vec<CounterexampleDoc>,
}

impl SweepEntryDoc {
    pub fn from_entry(e: &SweepEntry) -> Self {
        SweepEntryDoc {
            s: e.s,
            vertices: vertex_map(&e.vertices),
            zigzag_sails: e.zigzag_sails,
            holds: e.holds,
            counterexamples: e
                .counterexamples
                .iter()
                .map(|(sail, t)| CounterexampleDoc {
                    sail: sail.name(),
                    indices: t.indices,
                    orientation: t.orientation.symbol().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrutCountDoc {
    pub s: u32,
    pub box_kites: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passing: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripSyncDoc {
    pub n: u32,
    pub kites: usize,
    pub passing: usize,
    pub per_strut: Vec<StrutCountDoc>,
    pub entries: Vec<SweepEntryDoc>,
}

impl TripSyncDoc {
    pub fn from_report(report: &SweepReport) -> Self {
        TripSyncDoc {
            n: report.n,
            kites: report.kite_count(),
            passing: report.pass_count(),
            per_strut: report
                .per_strut()
                .into_iter()
                .map(|(s, k, p)| StrutCountDoc { s, box_kites: k, passing: Some(p) })
                .collect(),
            entries: report.entries.iter().map(SweepEntryDoc::from_entry).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub n: u32,
    pub per_strut: Vec<StrutCountDoc>,
    pub total: usize,
}

impl CensusDoc {
    pub fn from_census(c: &Census) -> Self {
        CensusDoc {
            n: c.n,
            per_strut: c.per_strut.iter().map(|&(s, k)| StrutCountDoc { s, box_kites: k, passing: None }).collect(),
            total: c.total(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathionDoc {
    pub n: u32,
    pub s: u32,
    pub excess: u32,
    pub assessors: Vec<[u32; 2]>,
    pub box_kites: Vec<BoxKiteDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdgeDoc {
    pub from: [u32; 2],
    pub to: [u32; 2],
    pub sign: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZdGraphDoc {
    pub n: u32,
    pub s: u32,
    pub vertices: Vec<[u32; 2]>,
    pub edges: Vec<GraphEdgeDoc>,
}

impl ZdGraphDoc {
    pub fn from_graph(g: &ZdGraph) -> Self {
        let pair = |a: &Assessor| [a.low(), a.high()];
        let vs = g.vertices();
        ZdGraphDoc {
            n: g.context().dim_exponent(),
            s: g.context().strut_constant(),
            vertices: vs.iter().map(pair).collect(),
            edges: g
                .edges()
                .map(|(i, j, sign)| GraphEdgeDoc { from: pair(&vs[i]), to: pair(&vs[j]), sign: sign_text(sign) })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use boxkite_core::build_box_kite;

    #[test]
    fn box_kite_document_round_trips() {
        for s in 1..8 {
            let bk = build_box_kite(s).unwrap();
            let doc = BoxKiteDoc::from_kite(&bk).unwrap();
            let text = serde_json::to_string(&doc).unwrap();
            let back: BoxKiteDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_kite().unwrap(), bk);
        }
    }

    #[test]
    fn tampered_edges_are_rejected() {
        let bk = build_box_kite(1).unwrap();
        let mut doc = BoxKiteDoc::from_kite(&bk).unwrap();
        doc.edges[0].sign = "+".into();
        assert!(doc.to_kite().is_err());
    }

    #[test]
    fn relabeled_vertices_are_rejected() {
        let bk = build_box_kite(1).unwrap();
        let mut doc = BoxKiteDoc::from_kite(&bk).unwrap();
        let a = doc.vertices["A"];
        let b = doc.vertices["B"];
        doc.vertices.insert("A".into(), b);
        doc.vertices.insert("B".into(), a);
        assert!(doc.to_kite().is_err());
    }
}
