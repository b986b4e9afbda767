use std::fmt::Write as _;
use std::str::FromStr;

use boxkite_core::kite::{goto_numbers, GOTO_ORDER};
use boxkite_core::lariat::{mock_octonion_table, quizzical_lariats, switching_yard, trip_sync_report};
use boxkite_core::{
    build_box_kite, census, emanation_assessors, find_box_kites, trip_sync_sweep, zd_graph, Assessor, BoxKite, Cell,
    EdgeSign, LariatTable, Sail, Strut, Vertex, MAX_DIM_EXPONENT,
};
use serde::Serialize;

use crate::doc::{
    kind_name, BoxKiteDoc, CensusDoc, MockDoc, PathionDoc, QuizzicalDoc, StrutRowDoc, SyncKiteDoc, TableDoc,
    TripSyncDoc, ZdGraphDoc,
};
use crate::render::{Document, Format, TextTable};
use crate::{roman, CliError, Result, StrutSelection};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    StrutTable,
    BoxKite,
    Yard,
    Mock,
    Quizzical,
    SyncTable,
    Pathion,
    Census,
    TripSync,
    ZdGraph,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::StrutTable,
        Target::BoxKite,
        Target::Yard,
        Target::Mock,
        Target::Quizzical,
        Target::SyncTable,
        Target::Pathion,
        Target::Census,
        Target::TripSync,
        Target::ZdGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::StrutTable => "strut-table",
            Target::BoxKite => "box-kite",
            Target::Yard => "yard",
            Target::Mock => "mock",
            Target::Quizzical => "quizzical",
            Target::SyncTable => "sync-table",
            Target::Pathion => "pathion",
            Target::Census => "census",
            Target::TripSync => "tripsync",
            Target::ZdGraph => "zd-graph",
        }
    }

    fn default_dim_exponent(self) -> u32 {
        match self {
            Target::Pathion | Target::Census | Target::TripSync => 5,
            _ => 4,
        }
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        Target::ALL.into_iter().find(|t| t.name() == text).ok_or_else(|| {
            let names: Vec<_> = Target::ALL.iter().map(|t| t.name()).collect();
            format!("unknown target {text:?} ({})", names.join(", "))
        })
    }
}

/// What to emit and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: Target,
    pub format: Format,
    /// Algebra dimension `2^n`; each target has its own default.
    pub dim: Option<u64>,
    pub struts: Option<StrutSelection>,
    /// Strut pair for the mock octonion table.
    pub pair: Option<Strut>,
    /// 1-based position in search order, for `box-kite` above 16 dimensions.
    pub kite: Option<usize>,
}

impl RenderSpec {
    pub fn new(target: Target, format: Format) -> Self {
        RenderSpec { target, format, dim: None, struts: None, pair: None, kite: None }
    }

    pub fn with_dim(mut self, dim: u64) -> Self {
        self.dim = Some(dim);
        self
    }

    pub fn with_strut(mut self, s: u32) -> Self {
        self.struts = Some(StrutSelection::single(s));
        self
    }

    fn n(&self) -> Result<u32> {
        let Some(dim) = self.dim else { return Ok(self.target.default_dim_exponent()) };
        if !dim.is_power_of_two() {
            return Err(CliError::usage(format!("--dim {dim} is not a power of two")));
        }
        let n = dim.trailing_zeros();
        if !(4..=MAX_DIM_EXPONENT).contains(&n) {
            return Err(CliError::usage(format!("--dim must lie between 16 and 2^{MAX_DIM_EXPONENT}")));
        }
        Ok(n)
    }

    fn sedenions_only(&self) -> Result<()> {
        match self.n()? {
            4 => Ok(()),
            _ => Err(CliError::usage(format!("{} is only defined for --dim 16", self.target.name()))),
        }
    }

    fn single_strut(&self, n: u32) -> Result<u32> {
        let sel =
            self.struts.as_ref().ok_or_else(|| CliError::usage(format!("{} needs --strut", self.target.name())))?;
        let s =
            sel.as_single().ok_or_else(|| CliError::usage(format!("{} takes a single --strut", self.target.name())))?;
        sel.resolve(n)?;
        Ok(s)
    }
}

/// Renders the requested structure.
pub fn emit(spec: &RenderSpec) -> Result<String> {
    document(spec)?.render(spec.format)
}

pub fn document(spec: &RenderSpec) -> Result<Document> {
    match spec.target {
        Target::StrutTable => {
            spec.sedenions_only()?;
            strut_table()
        }
        Target::BoxKite => {
            let n = spec.n()?;
            let s = spec.single_strut(n)?;
            box_kite(&select_kite(n, s, spec.kite)?)
        }
        Target::Yard => {
            spec.sedenions_only()?;
            let bk = build_box_kite(spec.single_strut(4)?)?;
            let table = switching_yard(&bk)?;
            Ok(lariat_document(format!("Switching Yard, {}", kite_name(&bk)), &bk, &table, spec.format, json))
        }
        Target::Mock => {
            spec.sedenions_only()?;
            let bk = build_box_kite(spec.single_strut(4)?)?;
            let strut = spec.pair.unwrap_or(Strut::AF);
            let table = mock_octonion_table(&bk, strut)?;
            let title = format!("Mock octonion lariat, {}, strut {}", kite_name(&bk), strut.name());
            let iso = table.is_octonion_isomorphic();
            Ok(lariat_document(title, &bk, &table, spec.format, |d| {
                json(&MockDoc { strut: strut.name().into(), octonion_isomorphic: iso, table: d.clone() })
            }))
        }
        Target::Quizzical => {
            spec.sedenions_only()?;
            quizzical(&build_box_kite(spec.single_strut(4)?)?)
        }
        Target::SyncTable => {
            spec.sedenions_only()?;
            sync_table()
        }
        Target::Pathion => {
            let n = spec.n()?;
            pathion(n, spec.single_strut(n)?)
        }
        Target::Census => census_document(spec.n()?),
        Target::TripSync => {
            let n = spec.n()?;
            let struts = spec.struts.clone().unwrap_or(StrutSelection::All).resolve(n)?;
            tripsync(n, &struts)
        }
        Target::ZdGraph => {
            let n = spec.n()?;
            graph_document(n, spec.single_strut(n)?)
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn kite_name(bk: &BoxKite) -> String {
    match (bk.dim_exponent(), roman(bk.strut_constant())) {
        (4, Some(r)) => format!("Box-Kite {r}"),
        (n, _) => format!("box-kite of 2^{n}-ions, s = {}", bk.strut_constant()),
    }
}

fn select_kite(n: u32, s: u32, index: Option<usize>) -> Result<BoxKite> {
    let k = index.unwrap_or(1);
    if n == 4 {
        if k != 1 {
            return Err(CliError::usage("each sedenion strut constant has exactly one box-kite"));
        }
        return Ok(build_box_kite(s)?);
    }
    let kites = find_box_kites(n, s)?;
    let count = kites.len();
    kites
        .into_iter()
        .nth(k.wrapping_sub(1))
        .ok_or_else(|| CliError::usage(format!("--kite {k} out of range: (n = {n}, s = {s}) has {count} box-kites")))
}

fn pair_text(a: &Assessor) -> String {
    format!("{}, {}", a.low(), a.high())
}

fn node_name(a: &Assessor) -> String {
    format!("{}_{}", a.low(), a.high())
}

/// Sail with its edge signs written between the letters, e.g. `A+D-E+`.
fn signed_sail(bk: &BoxKite, sail: Sail) -> String {
    sail.edges().iter().map(|&(u, v)| format!("{u}{}", bk.edge(u, v).expect("sail edge"))).collect()
}

fn dot_graph(name: &str, nodes: &[(String, String)], edges: &[(String, String, EdgeSign)]) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for (id, label) in nodes {
        let _ = writeln!(out, "  \"{id}\" [label=\"{label}\"];");
    }
    for (a, b, sign) in edges {
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\" [sign=\"{sign}\"];");
    }
    out.push_str("}\n");
    out
}

fn box_kite(bk: &BoxKite) -> Result<Document> {
    let doc = BoxKiteDoc::from_kite(bk)?;
    let mut vertices = TextTable::new(["Vertex", "Low", "High"]);
    for v in Vertex::ALL {
        let a = bk.vertex(v);
        vertices.push([v.to_string(), a.low().to_string(), a.high().to_string()]);
    }
    let mut edges = TextTable::new(["Edge", "Sign"]);
    for (u, v, sign) in bk.edges() {
        edges.push([format!("{u}{v}"), sign.to_string()]);
    }
    let mut sails = TextTable::new(["Sail", "Kind", "Signed"]);
    for sail in Sail::ALL {
        sails.push([sail.name(), kind_name(bk.sail_kind(sail)).to_string(), signed_sail(bk, sail)]);
    }
    let mut sections =
        vec![(Some("Vertices".into()), vertices), (Some("Edges".into()), edges), (Some("Sails".into()), sails)];
    if let Some(goto) = doc.goto {
        let mut t = TextTable::new(["Sail", "GoTo"]);
        for (sail, g) in GOTO_ORDER.iter().zip(goto) {
            t.push([sail.name(), g.to_string()]);
        }
        sections.push((Some("GoTo numbers".into()), t));
    }
    let nodes: Vec<_> = Vertex::ALL.iter().map(|&v| (node_name(&bk.vertex(v)), v.to_string())).collect();
    let links: Vec<_> = bk.edges().map(|(u, v, s)| (node_name(&bk.vertex(u)), node_name(&bk.vertex(v)), s)).collect();
    let name = format!("box_kite_{}_{}", bk.dim_exponent(), bk.strut_constant());
    Ok(Document { title: kite_name(bk), sections, json: json(&doc), dot: Some(dot_graph(&name, &nodes, &links)) })
}

fn strut_table() -> Result<Document> {
    let mut table = TextTable::new(["Box-Kite", "GoTo Numbers", "A", "B", "C", "D", "E", "F"]);
    let mut rows = Vec::new();
    for s in 1..8 {
        let bk = build_box_kite(s)?;
        let goto = goto_numbers(&bk)?;
        let name = roman(s).expect("sedenion strut").to_string();
        let goto_text = goto.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
        let mut row = vec![name.clone(), goto_text];
        row.extend(Vertex::ALL.iter().map(|&v| pair_text(&bk.vertex(v))));
        table.push(row);
        rows.push(StrutRowDoc { name, kite: BoxKiteDoc::from_kite(&bk)? });
    }
    Ok(Document { title: "Strut Table".into(), sections: vec![(None, table)], json: json(&rows), dot: None })
}

/// Square lariat table: compact cells in Markdown, signed cells elsewhere.
fn lariat_document(
    title: String,
    bk: &BoxKite,
    table: &LariatTable,
    format: Format,
    to_json: impl FnOnce(&TableDoc) -> String,
) -> Document {
    let cell = |c: &Cell| if format == Format::Markdown { c.compact() } else { c.to_string() };
    let mut headers = vec![String::new()];
    headers.extend(table.symbols().iter().map(|s| s.to_string()));
    let mut grid = TextTable::new(headers);
    for (sym, row) in table.symbols().iter().zip(table.rows()) {
        let mut line = vec![sym.to_string()];
        line.extend(row.iter().map(cell));
        grid.push(line);
    }
    let doc = TableDoc::from_table(bk, table);
    Document { title, sections: vec![(None, grid)], json: to_json(&doc), dot: None }
}

fn quizzical(bk: &BoxKite) -> Result<Document> {
    let lariats = quizzical_lariats(bk)?;
    let docs: Vec<QuizzicalDoc> = lariats.iter().map(QuizzicalDoc::from_lariat).collect();
    let mut table = TextTable::new(["Sail", "Lariat", "x^2", "y^2", "z^2", "xyz", "Hamilton"]);
    for d in &docs {
        let mut row = vec![d.sail.clone(), d.name.clone()];
        row.extend(d.squares.iter().cloned());
        row.push(d.triple_product.clone());
        row.push(if d.hamilton { "yes" } else { "no" }.into());
        table.push(row);
    }
    Ok(Document {
        title: format!("Quizzical quaternions, {}", kite_name(bk)),
        sections: vec![(None, table)],
        json: json(&docs),
        dot: None,
    })
}

fn sync_table() -> Result<Document> {
    let mut table = TextTable::new(["Box-Kite", "Sail", "Kind", "Trip 1", "Trip 2", "Trip 3", "Trip 4", "Trip-sync"]);
    let mut docs = Vec::new();
    for s in 1..8 {
        let report = trip_sync_report(&build_box_kite(s)?)?;
        let name = roman(s).expect("sedenion strut");
        for sail in &report.sails {
            let mut row = vec![name.to_string(), sail.sail.name(), kind_name(sail.kind).to_string()];
            row.extend(sail.trips.iter().map(|t| {
                let [a, b, c] = t.indices;
                format!("({a} {b} {c}){}", t.orientation)
            }));
            row.push(if sail.holds() { "holds" } else { "fails" }.into());
            table.push(row);
        }
        docs.push(SyncKiteDoc::from_report(name, &report));
    }
    Ok(Document {
        title: "Synchronization table by box-kite and sail".into(),
        sections: vec![(None, table)],
        json: json(&docs),
        dot: None,
    })
}

fn pathion(n: u32, s: u32) -> Result<Document> {
    let assessors = emanation_assessors(n, s)?;
    let kites = find_box_kites(n, s)?;
    let mut list = TextTable::new(["Low", "High", "Strut partner"]);
    for a in &assessors {
        list.push([a.low().to_string(), a.high().to_string(), (a.low() ^ s).to_string()]);
    }
    let mut table = TextTable::new(["#", "A", "B", "C", "D", "E", "F", "Zigzag sails"]);
    for (i, bk) in kites.iter().enumerate() {
        let mut row = vec![(i + 1).to_string()];
        row.extend(Vertex::ALL.iter().map(|&v| pair_text(&bk.vertex(v))));
        row.push(bk.zigzag_sail_count().to_string());
        table.push(row);
    }
    let doc = PathionDoc {
        n,
        s,
        excess: (1 << (n - 1)) + s,
        assessors: assessors.iter().map(|a| [a.low(), a.high()]).collect(),
        box_kites: kites.iter().map(BoxKiteDoc::from_kite).collect::<Result<_>>()?,
    };
    let graph = graph_document(n, s)?;
    Ok(Document {
        title: format!("Emanation of the 2^{n}-ions, s = {s}"),
        sections: vec![(Some("Assessors".into()), list), (Some("Box-kites".into()), table)],
        json: json(&doc),
        dot: graph.dot,
    })
}

fn census_document(n: u32) -> Result<Document> {
    let c = census(n)?;
    let mut table = TextTable::new(["s", "Box-kites"]);
    for &(s, k) in &c.per_strut {
        table.push([s.to_string(), k.to_string()]);
    }
    table.push(["total".to_string(), c.total().to_string()]);
    Ok(Document {
        title: format!("Box-kite census of the 2^{n}-ions"),
        sections: vec![(None, table)],
        json: json(&CensusDoc::from_census(&c)),
        dot: None,
    })
}

fn tripsync(n: u32, struts: &[u32]) -> Result<Document> {
    let report = trip_sync_sweep(n, struts)?;
    let mut summary = TextTable::new(["s", "Box-kites", "Trip-sync holds"]);
    for (s, k, p) in report.per_strut() {
        summary.push([s, k as u32, p as u32]);
    }
    let mut kites = TextTable::new(["s", "A", "B", "C", "D", "E", "F", "Zigzag sails", "Holds", "Counterexamples"]);
    for e in &report.entries {
        let mut row = vec![e.s.to_string()];
        row.extend(e.vertices.iter().map(|&(lo, hi)| format!("{lo}, {hi}")));
        row.push(e.zigzag_sails.to_string());
        row.push(if e.holds { "yes" } else { "no" }.into());
        let cx: Vec<String> = e
            .counterexamples
            .iter()
            .map(|(sail, t)| {
                let [a, b, c] = t.indices;
                format!("{sail}:({a} {b} {c}){}", t.orientation)
            })
            .collect();
        row.push(cx.join(" "));
        kites.push(row);
    }
    Ok(Document {
        title: format!(
            "Trip-sync sweep of the 2^{n}-ions: {} of {} box-kites hold",
            report.pass_count(),
            report.kite_count()
        ),
        sections: vec![(Some("Per strut constant".into()), summary), (Some("Box-kites".into()), kites)],
        json: json(&TripSyncDoc::from_report(&report)),
        dot: None,
    })
}

fn graph_document(n: u32, s: u32) -> Result<Document> {
    let g = zd_graph(n, s)?;
    let vs = g.vertices();
    let mut degree = vec![0usize; vs.len()];
    let mut edges = TextTable::new(["From", "To", "Sign"]);
    let mut links = Vec::new();
    for (i, j, sign) in g.edges() {
        degree[i] += 1;
        degree[j] += 1;
        edges.push([pair_text(&vs[i]), pair_text(&vs[j]), sign.to_string()]);
        links.push((node_name(&vs[i]), node_name(&vs[j]), sign));
    }
    let mut vertices = TextTable::new(["Low", "High", "Degree"]);
    for (a, d) in vs.iter().zip(&degree) {
        vertices.push([a.low() as usize, a.high() as usize, *d]);
    }
    let nodes: Vec<_> = vs.iter().map(|a| (node_name(a), format!("({}, {})", a.low(), a.high()))).collect();
    Ok(Document {
        title: format!("Zero-divisor graph of the 2^{n}-ions, s = {s}"),
        sections: vec![(Some("Vertices".into()), vertices), (Some("Edges".into()), edges)],
        json: json(&ZdGraphDoc::from_graph(&g)),
        dot: Some(dot_graph(&format!("zd_{n}_{s}"), &nodes, &links)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("kite".parse::<Target>().is_err());
    }

    #[test]
    fn box_kite_json_has_vertex_map() {
        let out = emit(&RenderSpec::new(Target::BoxKite, Format::Json).with_strut(1)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"]["A"], serde_json::json!([3, 10]));
        assert_eq!(v["n"], 4);
        assert_eq!(v["goto"], serde_json::json!([7, 6, 4, 5]));
    }

    #[test]
    fn dot_uses_low_high_node_names() {
        let out = emit(&RenderSpec::new(Target::ZdGraph, Format::Dot).with_strut(1)).unwrap();
        assert!(out.contains("\"3_10\" -- \"6_15\" [sign=\"-\"];"), "{out}");
        assert_eq!(out.matches(" -- ").count(), 12);
    }

    #[test]
    fn usage_errors() {
        let bad = [
            RenderSpec::new(Target::Yard, Format::Markdown),
            RenderSpec::new(Target::Yard, Format::Markdown).with_strut(8),
            RenderSpec::new(Target::Yard, Format::Markdown).with_strut(1).with_dim(32),
            RenderSpec::new(Target::Census, Format::Markdown).with_dim(48),
            RenderSpec::new(Target::Census, Format::Dot),
            RenderSpec { kite: Some(2), ..RenderSpec::new(Target::BoxKite, Format::Json).with_strut(1) },
        ];
        for spec in bad {
            assert!(matches!(emit(&spec), Err(CliError::Usage(_))), "{spec:?}");
        }
    }

    #[test]
    fn pathion_kite_selection() {
        let spec =
            RenderSpec { kite: Some(3), ..RenderSpec::new(Target::BoxKite, Format::Json).with_strut(9).with_dim(32) };
        let v: serde_json::Value = serde_json::from_str(&emit(&spec).unwrap()).unwrap();
        assert_eq!(v["n"], 5);
        assert!(v.get("goto").is_none());
        let spec = RenderSpec { kite: Some(4), ..spec };
        assert!(emit(&spec).is_err());
    }

    #[test]
    fn strut_table_markdown_row() {
        let out = emit(&RenderSpec::new(Target::StrutTable, Format::Markdown)).unwrap();
        assert!(out.contains("| I | 7, 6, 4, 5 | 3, 10 | 6, 15 | 5, 12 | 4, 13 | 7, 14 | 2, 11 |"), "{out}");
    }
}
