//! Checks computed structures against the embedded reference tables and
//! against derived counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display};
use std::str::FromStr;

use boxkite_core::algebra::IdentityCheck;
use boxkite_core::kite::{
    all_assessors, automorpheme, edge_sign, goto_numbers, octonion_copy, sail_otrip, sail_six_cycle, tray_racks,
    trigram_code, SailKind, TrayRack, EDGES, GOTO_ORDER,
};
use boxkite_core::lariat::{
    mock_octonion_symbols, mock_octonion_table, quizzical_lariats, scale_law_holds, switching_yard, trip_sync_report,
    LineSymbol, SailSync,
};
use boxkite_core::{
    build_box_kite, census, check_identity, emanation_assessors, enumerate_trips, find_box_kites, lariat_product,
    loop_closure, pathion_lift, trip_orientation, Assessor, BoxKite, Cell, EdgeSign, Error, Hypercomplex, LoopIdentity,
    Sail, Strut, Trip, TripFilter, Vertex,
};
use num_rational::Rational64;
use serde::Serialize;

use crate::fixtures::{fixture, Fixture, Record, FIXTURES};
use crate::render::{Format, TextTable};
use crate::{from_roman, roman, CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    OTrips,
    STrips,
    Fabric,
    StrutTable,
    EdgeSigns,
    TrayRacks,
    Trigrams,
    Automorphemes,
    Loops,
    Quizzical,
    Mock,
    Yard,
    TripSync,
    SyncTable,
    Pathion,
    Census,
}

impl Section {
    pub const ALL: [Section; 16] = [
        Section::OTrips,
        Section::STrips,
        Section::Fabric,
        Section::StrutTable,
        Section::EdgeSigns,
        Section::TrayRacks,
        Section::Trigrams,
        Section::Automorphemes,
        Section::Loops,
        Section::Quizzical,
        Section::Mock,
        Section::Yard,
        Section::TripSync,
        Section::SyncTable,
        Section::Pathion,
        Section::Census,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::OTrips => "o-trips",
            Section::STrips => "s-trips",
            Section::Fabric => "fabric",
            Section::StrutTable => "strut-table",
            Section::EdgeSigns => "edge-signs",
            Section::TrayRacks => "tray-racks",
            Section::Trigrams => "trigrams",
            Section::Automorphemes => "automorphemes",
            Section::Loops => "loops",
            Section::Quizzical => "quizzical",
            Section::Mock => "mock",
            Section::Yard => "yard",
            Section::TripSync => "trip-sync",
            Section::SyncTable => "sync-table",
            Section::Pathion => "pathion",
            Section::Census => "census",
        }
    }

    /// Fixtures read by this section.
    pub fn fixtures(self) -> &'static [&'static str] {
        match self {
            Section::OTrips => &["o_trips"],
            Section::STrips => &["s_trips"],
            Section::Fabric => &["progression"],
            Section::StrutTable => &["strut_table"],
            Section::TrayRacks => &["tray_racks"],
            Section::Trigrams => &["trigrams"],
            Section::Automorphemes => &["automorphemes"],
            Section::Quizzical => &["quizzical"],
            Section::Mock => &["mock_octonion"],
            Section::Yard => &["switching_yard"],
            Section::SyncTable => &["sync_table"],
            Section::Pathion => &["pathion_s1_assessors", "pathion_s1_kites", "pathion_s9_kites"],
            Section::Census => &["census_claims"],
            Section::EdgeSigns | Section::Loops | Section::TripSync => &[],
        }
    }

    fn run(self, ctx: &mut Ctx) -> Result<()> {
        match self {
            Section::OTrips => o_trips(ctx),
            Section::STrips => s_trips(ctx),
            Section::Fabric => fabric(ctx),
            Section::StrutTable => strut_table(ctx),
            Section::EdgeSigns => edge_signs(ctx),
            Section::TrayRacks => tray_rack_checks(ctx),
            Section::Trigrams => trigrams(ctx),
            Section::Automorphemes => automorphemes(ctx),
            Section::Loops => loops(ctx),
            Section::Quizzical => quizzical(ctx),
            Section::Mock => mock(ctx),
            Section::Yard => yard(ctx),
            Section::TripSync => trip_sync(ctx),
            Section::SyncTable => sync_table(ctx),
            Section::Pathion => pathion(ctx),
            Section::Census => census_claims(ctx),
        }
    }

    /// Parses `all` or a comma list of section names.
    pub fn parse_list(text: &str) -> std::result::Result<Vec<Section>, String> {
        if text == "all" {
            return Ok(Section::ALL.to_vec());
        }
        let mut out: Vec<Section> = text.split(',').map(|t| t.trim().parse()).collect::<std::result::Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        Section::ALL.into_iter().find(|s| s.name() == text).ok_or_else(|| {
            let names: Vec<_> = Section::ALL.iter().map(|s| s.name()).collect();
            format!("unknown section {text:?} ({})", names.join(", "))
        })
    }
}

impl Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A published figure disagrees with the computation and the check
    /// exists to record that disagreement.
    Flagged,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub section: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub summary: Summary,
    pub checks: Vec<Check>,
    /// How many times each fixture was read.
    pub fixtures: BTreeMap<&'static str, usize>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(!self.all_pass())
    }

    pub fn section(&self, section: Section) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(move |c| c.section == section.name())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let mut table = TextTable::new(["Id", "Anchor", "Expected", "Computed", "Status"]);
        for c in &self.checks {
            table.push([c.id.clone(), c.anchor.clone(), c.expected.clone(), c.computed.clone(), c.status.to_string()]);
        }
        let s = &self.summary;
        match format {
            Format::Markdown => {
                let mut out = format!(
                    "# Verification report\n\n{} checks: {} pass, {} fail, {} flagged\n\n{}",
                    s.checks,
                    s.pass,
                    s.fail,
                    s.flagged,
                    table.to_markdown()
                );
                let notes: Vec<_> = self.checks.iter().filter_map(|c| Some((c, c.note.as_ref()?))).collect();
                if !notes.is_empty() {
                    out.push_str("\n## Notes\n\n");
                    for (c, note) in notes {
                        out.push_str(&format!("- `{}` ({}): {}\n", c.id, c.status, note));
                    }
                }
                Ok(out)
            }
            Format::Csv => table.to_csv(),
            Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(self)?)),
            Format::Dot => Err(CliError::usage("the verification report has no dot rendering")),
        }
    }
}

struct Ctx {
    section: Section,
    checks: Vec<Check>,
    used: BTreeMap<&'static str, usize>,
}

impl Ctx {
    fn fixture(&mut self, id: &str) -> &'static Fixture {
        let f = fixture(id);
        *self.used.entry(f.id).or_default() += 1;
        f
    }

    fn push(
        &mut self,
        id: String,
        anchor: &str,
        expected: String,
        computed: String,
        status: Status,
        note: Option<String>,
    ) {
        self.checks.push(Check {
            id: format!("{}/{id}", self.section),
            section: self.section.name().into(),
            anchor: anchor.into(),
            expected,
            computed,
            status,
            note,
        });
    }

    /// Pass iff the two renderings are identical.
    fn compare(&mut self, id: impl Display, anchor: &str, expected: impl Display, computed: impl Display) {
        let (e, c) = (expected.to_string(), computed.to_string());
        let status = if e == c { Status::Pass } else { Status::Fail };
        self.push(id.to_string(), anchor, e, c, status, None);
    }
}

/// Runs the requested sections in canonical order. With every section
/// selected, a final check confirms each fixture was read exactly once.
pub fn verify(sections: &[Section]) -> Result<VerificationReport> {
    let mut ctx = Ctx { section: Section::OTrips, checks: Vec::new(), used: BTreeMap::new() };
    let mut selected = sections.to_vec();
    selected.sort();
    selected.dedup();
    for &section in &selected {
        ctx.section = section;
        section.run(&mut ctx)?;
    }
    if selected == Section::ALL {
        let expected: Vec<String> = FIXTURES.iter().map(|f| format!("{}x1", f.id)).collect();
        let computed: Vec<String> =
            FIXTURES.iter().map(|f| format!("{}x{}", f.id, ctx.used.get(f.id).copied().unwrap_or(0))).collect();
        let status = if expected == computed && ctx.used.len() == FIXTURES.len() { Status::Pass } else { Status::Fail };
        ctx.checks.push(Check {
            id: "registry/coverage".into(),
            section: "registry".into(),
            anchor: "fixture registry".into(),
            expected: expected.join(" "),
            computed: computed.join(" "),
            status,
            note: None,
        });
    }
    let count = |s: Status| ctx.checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        checks: ctx.checks.len(),
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        flagged: count(Status::Flagged),
    };
    Ok(VerificationReport { summary, checks: ctx.checks, fixtures: ctx.used })
}

fn three(r: &Record) -> Result<[u32; 3]> {
    let v = r.numbers()?;
    v.try_into().map_err(|v: Vec<u32>| r.error(format!("expected three indices, got {}", v.len())))
}

fn trip_list(trips: &[Trip]) -> String {
    trips.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

fn kites() -> Result<Vec<(u32, &'static str, BoxKite)>> {
    (1..8).map(|s| Ok((s, roman(s).expect("sedenion strut"), build_box_kite(s)?))).collect()
}

fn o_trips(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("o_trips");
    let mut listed = Vec::new();
    for r in f.records() {
        let [a, b, c] = three(&r)?;
        ctx.compare(format!("({a} {b} {c})"), f.anchor(), "+", trip_orientation(a, b, c)?);
        listed.push(Trip::new(a, b, c)?);
    }
    ctx.compare("enumeration", f.anchor(), trip_list(&listed), trip_list(&enumerate_trips(3, TripFilter::Octonion)?));
    Ok(())
}

fn s_trips(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("s_trips");
    let mut listed = Vec::new();
    for r in f.records() {
        let [a, b, c] = three(&r)?;
        ctx.compare(format!("({a} {b} {c})"), f.anchor(), "+", trip_orientation(a, b, c)?);
        listed.push(Trip::new(a, b, c)?);
    }
    listed.sort();
    ctx.compare("enumeration", f.anchor(), trip_list(&listed), trip_list(&enumerate_trips(4, TripFilter::Sedenion)?));
    Ok(())
}

/// Parses `3+10` as `e3 + e10`.
fn diagonal_term(r: &Record, field: &str) -> Result<Hypercomplex> {
    let (split, sign) = match (field.find('+'), field.find('-')) {
        (Some(i), None) => (i, 1),
        (None, Some(i)) => (i, -1),
        _ => return Err(r.error(format!("expected low+high or low-high: {field:?}"))),
    };
    let (low, high): (u32, u32) = (r.parse(&field[..split])?, r.parse(&field[split + 1..])?);
    Ok(Hypercomplex::from_terms(4, [(low, 1), (high, sign)])?)
}

fn fabric(ctx: &mut Ctx) -> Result<()> {
    const ANCHOR: &str = "Zero divisors fill 84 diagonal lines spanning 42 assessor planes";
    let assessors = all_assessors(4)?;
    ctx.compare("assessors", ANCHOR, 42, assessors.len());
    ctx.compare("diagonals", ANCHOR, 84, 2 * assessors.len());

    let f = ctx.fixture("progression");
    let mut printed = Vec::new();
    for r in f.records() {
        let fields = r.fields();
        let [left, right] = fields[..] else { return Err(r.error("expected two diagonals")) };
        let product = &diagonal_term(&r, left)? * &diagonal_term(&r, right)?;
        ctx.compare(format!("({left})({right})"), f.anchor(), "0", product);
        printed.push(format!("{left} {right}"));
    }
    let bk = build_box_kite(1)?;
    let cycle = sail_six_cycle(&bk, Sail::ABC, bk.vertex(Vertex::A).slash())?;
    let term =
        |d: &boxkite_core::Diagonal| format!("{}{}{}", d.assessor.low(), d.orientation.high_sign(), d.assessor.high());
    let computed: Vec<String> = cycle.iter().map(|(x, y)| format!("{} {}", term(x), term(y))).collect();
    ctx.compare("six-cycle", f.anchor(), printed.join("; "), computed.join("; "));
    Ok(())
}

fn strut_table(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("strut_table");
    for r in f.records() {
        let fields = r.fields();
        if fields.len() != 8 {
            return Err(r.error("expected name, GoTo numbers and six vertices"));
        }
        let s = from_roman(fields[0]).ok_or_else(|| r.error("unknown box-kite numeral"))?;
        let expected = fields[1..].join(" ");
        let bk = build_box_kite(s)?;
        let goto = goto_numbers(&bk)?.map(|g| g.to_string()).join(",");
        let vertices = Vertex::ALL.iter().map(|&v| format!("{},{}", bk.vertex(v).low(), bk.vertex(v).high()));
        let computed = std::iter::once(goto).chain(vertices).collect::<Vec<_>>().join(" ");
        ctx.compare(fields[0], f.anchor(), expected, computed);
    }
    Ok(())
}

fn rule_sign(u: Vertex, v: Vertex) -> EdgeSign {
    let upper = |x: Vertex| x.index() < 3;
    if upper(u) == upper(v) {
        EdgeSign::Minus
    } else {
        EdgeSign::Plus
    }
}

fn edge_signs(ctx: &mut Ctx) -> Result<()> {
    const RULE: &str = "Edge-sign rule: ABC and DEF edges -, the six others +";
    const STRUTS: &str = "Struts are the only vertex pairs without mutual zero divisors";
    const DICHOTOMY: &str = "Edge signs are well defined: never both orientation pairings";
    for (_, name, bk) in kites()? {
        let expected: String = EDGES.iter().map(|&(u, v)| rule_sign(u, v).symbol()).collect();
        let computed: String = EDGES.iter().map(|&(u, v)| bk.edge(u, v).map_or('0', EdgeSign::symbol)).collect();
        ctx.compare(format!("{name}/rule"), RULE, expected, computed);
        let inert = Strut::ALL
            .iter()
            .map(|st| {
                let (p, q) = st.ends();
                Ok(edge_sign(&bk.vertex(p), &bk.vertex(q))?.is_none())
            })
            .collect::<Result<Vec<bool>>>()?;
        ctx.compare(
            format!("{name}/struts"),
            STRUTS,
            "3 inert",
            format!("{} inert", inert.iter().filter(|&&x| x).count()),
        );
    }
    for n in [4, 5] {
        let assessors = all_assessors(n)?;
        let mut conflicts = 0;
        for (i, u) in assessors.iter().enumerate() {
            for v in &assessors[i + 1..] {
                match edge_sign(u, v) {
                    Err(Error::EdgeSignConflict(..)) => conflicts += 1,
                    other => {
                        other?;
                    }
                }
            }
        }
        ctx.compare(
            format!("dichotomy-n{n}"),
            DICHOTOMY,
            "0 conflicting pairs",
            format!("{conflicts} conflicting pairs"),
        );
    }
    Ok(())
}

/// A printed tray-rack cycle like `B-C+E-D+`.
fn parse_rack(r: &Record) -> Result<Vec<(Vertex, EdgeSign)>> {
    let chars: Vec<char> = r.text.chars().collect();
    if chars.len() != 8 {
        return Err(r.error("expected four vertex/sign pairs"));
    }
    chars
        .chunks(2)
        .map(|pair| {
            let v = Vertex::from_letter(pair[0]).ok_or_else(|| r.error(format!("bad vertex {}", pair[0])))?;
            let s = match pair[1] {
                '+' => EdgeSign::Plus,
                '-' => EdgeSign::Minus,
                c => return Err(r.error(format!("bad sign {c}"))),
            };
            Ok((v, s))
        })
        .collect()
}

/// Undirected signed edges of a 4-cycle; equal sets mean equal cycles up
/// to rotation and reflection.
fn cycle_edges(cycle: &[(Vertex, EdgeSign)]) -> BTreeSet<(Vertex, Vertex, EdgeSign)> {
    (0..cycle.len())
        .map(|k| {
            let (u, s) = cycle[k];
            let v = cycle[(k + 1) % cycle.len()].0;
            (u.min(v), u.max(v), s)
        })
        .collect()
}

fn rack_cycle(rack: &TrayRack) -> Vec<(Vertex, EdgeSign)> {
    rack.vertices.iter().copied().zip(rack.signs).collect()
}

fn is_square(cycle: &[(Vertex, EdgeSign)]) -> bool {
    let vs: BTreeSet<Vertex> = cycle.iter().map(|&(v, _)| v).collect();
    vs.len() == 4 && vs.iter().all(|v| vs.contains(&v.strut_partner()))
}

fn tray_rack_checks(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("tray_racks");
    let bk = build_box_kite(1)?;
    let racks = tray_racks(&bk)?;
    let printed = f.records().map(|r| Ok((r, parse_rack(&r)?))).collect::<Result<Vec<_>>>()?;
    let matching =
        |cycle: &[(Vertex, EdgeSign)]| racks.iter().find(|k| cycle_edges(&rack_cycle(k)) == cycle_edges(cycle));
    let unmatched: Vec<&TrayRack> =
        racks.iter().filter(|k| !printed.iter().any(|(_, p)| matching(p) == Some(*k))).collect();
    for (r, cycle) in &printed {
        if let Some(rack) = matching(cycle) {
            ctx.push(r.text.into(), f.anchor(), r.text.into(), rack.notation(), Status::Pass, None);
            continue;
        }
        let near = unmatched
            .iter()
            .find(|k| k.notation().chars().zip(r.text.chars()).filter(|(a, b)| a != b).count() == 1)
            .filter(|_| !is_square(cycle));
        match near {
            Some(rack) => ctx.push(
                r.text.into(),
                f.anchor(),
                r.text.into(),
                rack.notation(),
                Status::Flagged,
                Some(format!(
                    "printed cycle {} is not a square of the octahedron; the remaining square {} differs in one vertex",
                    r.text,
                    rack.notation()
                )),
            ),
            None => ctx.push(r.text.into(), f.anchor(), r.text.into(), "no matching square".into(), Status::Fail, None),
        }
    }
    const SHIFT: &str = "Toggling tray-rack signs shifts the sequence one step";
    for (_, name, bk) in kites()? {
        for rack in tray_racks(&bk)? {
            let mut shifted = rack.signs;
            shifted.rotate_left(1);
            let fmt = |s: &[EdgeSign; 4]| s.iter().map(|x| x.symbol()).collect::<String>();
            ctx.compare(
                format!("{name}/{}/toggle", rack.axis.name()),
                SHIFT,
                fmt(&shifted),
                fmt(&rack.toggled().signs),
            );
        }
    }
    Ok(())
}

fn trigrams(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("trigrams");
    let mut expected = Vec::new();
    for r in f.records() {
        let fields = r.fields();
        let switched = match fields.first() {
            Some(&"unswitched") => false,
            Some(&"switched") => true,
            _ => return Err(r.error("expected a switch state")),
        };
        expected.push((switched, fields[0], fields[1..].join(" ")));
    }
    for (_, name, bk) in kites()? {
        for (switched, state, codes) in &expected {
            let computed: Vec<String> = trigram_code(&bk, *switched).iter().map(|(_, t)| t.signs()).collect();
            ctx.compare(format!("{name}/{state}"), f.anchor(), codes, computed.join(" "));
        }
    }
    Ok(())
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn automorphemes(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("automorphemes");
    let bk = build_box_kite(1)?;
    let mut order = Vec::new();
    for r in f.records() {
        let fields = r.fields();
        let sail = fields.first().and_then(|s| Sail::parse(s)).ok_or_else(|| r.error("expected a sail name"))?;
        let mut axes = fields[1..].iter().map(|x| r.parse::<u32>(x)).collect::<Result<Vec<_>>>()?;
        axes.sort();
        ctx.compare(format!("I/{sail}"), f.anchor(), join(axes), join(automorpheme(&sail_otrip(&bk, sail)?)?));
        order.push(sail);
    }
    ctx.compare("I/order", f.anchor(), join(order), join(GOTO_ORDER));
    Ok(())
}

fn loops(ctx: &mut Ctx) -> Result<()> {
    const AUTO: &str = "Automorpheme loops are not Moufang";
    const OCT: &str = "O-trip + 8 + XOR loops are octonion loops";
    const Q8: &str = "The 35 trips generate quaternion groups";
    const CYCLIC: &str = "Each imaginary unit generates a 4-cycle";
    for t in enumerate_trips(3, TripFilter::Octonion)? {
        let auto = loop_closure(automorpheme(&t)?);
        let results: Vec<String> = LoopIdentity::MOUFANG_FORMS
            .iter()
            .map(|&id| match check_identity(&auto, id) {
                IdentityCheck::Pass => format!("{} holds", id.name()),
                IdentityCheck::Counterexample(x, y, z) => format!("{} fails at ({x}, {y}, {z})", id.name()),
            })
            .collect();
        let failing = results.iter().filter(|r| r.contains("fails")).count();
        let status =
            if failing == 3 && auto.len() == 16 && auto.input_was_closed() { Status::Pass } else { Status::Fail };
        ctx.push(
            format!("automorpheme{t}"),
            AUTO,
            "16 elements, 3 of 3 Moufang forms fail".into(),
            format!("{} elements; {}", auto.len(), results.join("; ")),
            status,
            None,
        );

        let copy = loop_closure(octonion_copy(&t)?);
        let passing = LoopIdentity::MOUFANG_FORMS.iter().filter(|&&id| check_identity(&copy, id).holds()).count();
        let alternative = check_identity(&copy, LoopIdentity::Alternative).holds();
        ctx.compare(
            format!("octonion-copy{t}"),
            OCT,
            "16 elements, 3 of 3 Moufang forms hold, alternative",
            format!(
                "{} elements, {passing} of 3 Moufang forms hold, {}",
                copy.len(),
                if alternative { "alternative" } else { "not alternative" }
            ),
        );
    }
    let trips = enumerate_trips(4, TripFilter::All)?;
    let q8 = trips.iter().filter(|t| loop_closure(t.indices()).is_quaternion_group()).count();
    ctx.compare("trip-groups", Q8, format!("{} of 35", 35), format!("{q8} of {}", trips.len()));
    let cyclic = (1..16)
        .filter(|&i| {
            loop_closure([i]).len() == 4 && check_identity(&loop_closure([i]), LoopIdentity::Associative).holds()
        })
        .count();
    ctx.compare("unit-cycles", CYCLIC, 15, cyclic);
    Ok(())
}

fn quizzical(ctx: &mut Ctx) -> Result<()> {
    const SCALE: &str = "Scale law (kP)(kQ) = 2k^2 R at k = 1 and k = 1/2";
    let f = ctx.fixture("quizzical");
    let mut published = Vec::new();
    for r in f.records() {
        let fields = r.fields();
        let sail = fields.first().and_then(|s| Sail::parse(s)).ok_or_else(|| r.error("expected a sail name"))?;
        published.push((sail, fields[1..].join(" ")));
    }
    let mut total = 0;
    let mut scale_failures = Vec::new();
    for (_, name, bk) in kites()? {
        let lariats = quizzical_lariats(&bk)?;
        total += lariats.len();
        for (sail, expected) in &published {
            let mine: Vec<_> = lariats.iter().filter(|q| q.sail == *sail).collect();
            let names = join(mine.iter().map(|q| q.name()));
            let hamilton = mine.iter().all(|q| q.satisfies_hamilton());
            ctx.compare(
                format!("{name}/{sail}"),
                f.anchor(),
                format!("{expected}; x^2 = y^2 = z^2 = xyz = -R"),
                format!("{names}; {}", if hamilton { "x^2 = y^2 = z^2 = xyz = -R" } else { "Hamilton relation fails" }),
            );
        }
        for q in &lariats {
            for &p in &q.triple {
                for &r in &q.triple {
                    if p == r {
                        continue;
                    }
                    let scale = lariat_product(&bk, p, r)?.scale;
                    for k in [Rational64::from_integer(1), Rational64::new(1, 2)] {
                        if scale != 2 || !scale_law_holds(&bk, p, r, k)? {
                            scale_failures.push(format!("{name}:{p}{r}@{k}"));
                        }
                    }
                }
            }
        }
    }
    ctx.compare("count", f.anchor(), 56, total);
    ctx.compare(
        "scale-law",
        SCALE,
        "0 failures",
        format!("{} failures {}", scale_failures.len(), join(&scale_failures)).trim_end().to_string(),
    );
    Ok(())
}

type TableRows = Vec<(Record, Vec<Cell>)>;

/// Reads a square table fixture: header symbols and compact cell rows.
fn table_fixture(f: &'static Fixture) -> Result<(Vec<LineSymbol>, TableRows)> {
    let header =
        f.header("sym").ok_or(CliError::Fixture { id: f.id, line: 1, message: "missing # sym header".into() })?;
    let symbols = header
        .split_whitespace()
        .map(|s| s.parse().map_err(|e| CliError::Fixture { id: f.id, line: 1, message: e }))
        .collect::<Result<Vec<LineSymbol>>>()?;
    let mut rows = Vec::new();
    for r in f.records() {
        let fields = r.fields();
        if fields.len() != symbols.len() + 1 || fields[0].parse::<LineSymbol>().ok() != Some(symbols[rows.len()]) {
            return Err(r.error("row label or width does not match the header"));
        }
        let cells =
            fields[1..].iter().map(|c| c.parse::<Cell>().map_err(|e| r.error(e))).collect::<Result<Vec<_>>>()?;
        rows.push((r, cells));
    }
    Ok((symbols, rows))
}

fn compact_row(cells: &[Cell]) -> String {
    join(cells.iter().map(Cell::compact))
}

fn mock(ctx: &mut Ctx) -> Result<()> {
    const ISO: &str = "Mock octonion lariats are octonion-isomorphic under (R, 8, X, S, P, q, p, Q)";
    let f = ctx.fixture("mock_octonion");
    let (symbols, rows) = table_fixture(f)?;
    let bk = build_box_kite(1)?;
    ctx.compare("I/A-F/symbols", f.anchor(), join(&symbols), join(mock_octonion_symbols(Strut::AF)));
    let table = mock_octonion_table(&bk, Strut::AF)?;
    for ((_, printed), (sym, computed)) in rows.iter().zip(symbols.iter().zip(table.rows())) {
        ctx.compare(format!("I/A-F/row-{sym}"), f.anchor(), compact_row(printed), compact_row(computed));
    }
    for (_, name, bk) in kites()? {
        for strut in Strut::ALL {
            let iso = mock_octonion_table(&bk, strut)?.is_octonion_isomorphic();
            ctx.compare(
                format!("{name}/{}", strut.name()),
                ISO,
                "isomorphic",
                if iso { "isomorphic" } else { "not isomorphic" },
            );
        }
    }
    Ok(())
}

fn yard(ctx: &mut Ctx) -> Result<()> {
    const ZEROS: &str = "Edge-sign zeros fill 48 of the 256 yard cells";
    const SUBST: &str = "All seven Switching Yards agree under letter substitution";
    const CLOSURE: &str = "Every yard product collapses onto a signed yard line";
    let f = ctx.fixture("switching_yard");
    let (symbols, rows) = table_fixture(f)?;
    ctx.compare("I/symbols", f.anchor(), join(&symbols), join(LineSymbol::YARD_ORDER));
    let reference = switching_yard(&build_box_kite(1)?)?;
    for ((_, printed), (sym, computed)) in rows.iter().zip(symbols.iter().zip(reference.rows())) {
        ctx.compare(format!("I/row-{sym}"), f.anchor(), compact_row(printed), compact_row(computed));
    }
    for (_, name, bk) in kites()? {
        let mut collapse_failures = 0;
        for p in LineSymbol::YARD_ORDER {
            for q in LineSymbol::YARD_ORDER {
                match lariat_product(&bk, p, q) {
                    Err(Error::NonCollapsible { .. }) => collapse_failures += 1,
                    other => {
                        other?;
                    }
                }
            }
        }
        ctx.compare(
            format!("{name}/closure"),
            CLOSURE,
            "0 of 256 non-collapsible",
            format!("{collapse_failures} of 256 non-collapsible"),
        );
        let table = switching_yard(&bk)?;
        ctx.compare(format!("{name}/zeros"), ZEROS, 48, table.zero_count());
        let differing =
            table.rows().iter().flatten().zip(reference.rows().iter().flatten()).filter(|(a, b)| a != b).count();
        ctx.compare(
            format!("{name}/substitution"),
            SUBST,
            "0 cells differ from Box-Kite I",
            format!("{differing} cells differ from Box-Kite I"),
        );
    }
    Ok(())
}

/// Positive-trip counts per sail, plus whether each trefoil's positive
/// mixed trip keeps the octonion of its `A`, `B` or `C` vertex.
fn sync_shape(sails: &[SailSync]) -> String {
    let counts = join(sails.iter().map(|s| format!("{}:{}", s.sail, s.positive_count())));
    let shared = sails.iter().filter(|s| s.kind == SailKind::Trefoil).all(|s| {
        let mixed: Vec<usize> = (1..4).filter(|&k| s.trips[k].orientation.is_plus()).collect();
        s.trips[0].orientation.is_plus() && mixed.len() == 1 && s.sail.vertices[mixed[0] - 1].index() < 3
    });
    format!(
        "{counts}; positive mixed trip {} ABC",
        if shared { "shares an octonion with" } else { "does not share an octonion with" }
    )
}

fn trip_sync(ctx: &mut Ctx) -> Result<()> {
    const ANCHOR: &str = "Trip-sync: zigzag trips all aligned, trefoils exactly two";
    for (_, name, bk) in kites()? {
        let report = trip_sync_report(&bk)?;
        let kinds = join(report.sails.iter().map(|s| format!("{}:{}", s.sail, crate::doc::kind_name(s.kind))));
        ctx.compare(format!("{name}/kinds"), ANCHOR, "ABC:zigzag ADE:trefoil FCE:trefoil FDB:trefoil", kinds);
        ctx.compare(
            format!("{name}/orientations"),
            ANCHOR,
            "ABC:4 ADE:2 FCE:2 FDB:2; positive mixed trip shares an octonion with ABC",
            sync_shape(&report.sails),
        );
    }
    Ok(())
}

fn trips_text(trips: &[[u32; 3]]) -> String {
    join(trips.iter().map(|[a, b, c]| format!("({a} {b} {c})")))
}

fn sync_table(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("sync_table");
    let reports: BTreeMap<u32, _> =
        (1..8).map(|s| Ok((s, trip_sync_report(&build_box_kite(s)?)?))).collect::<Result<_>>()?;
    for r in f.records() {
        let fields = r.fields();
        let s = fields.first().and_then(|x| from_roman(x)).ok_or_else(|| r.error("unknown box-kite numeral"))?;
        let sail = fields.get(1).and_then(|x| Sail::parse(x)).ok_or_else(|| r.error("expected a sail name"))?;
        let numbers: Vec<u32> = fields[2..].iter().filter(|&&x| x != "|").map(|x| r.parse(x)).collect::<Result<_>>()?;
        if numbers.len() != 12 {
            return Err(r.error("expected four trips"));
        }
        let printed: Vec<[u32; 3]> = numbers.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        let sync = reports[&s].sails.iter().find(|x| x.sail == sail).expect("every sail reported");
        let computed: Vec<[u32; 3]> = sync.trips.iter().map(|t| t.indices).collect();
        ctx.compare(format!("{}/{sail}", fields[0]), f.anchor(), trips_text(&printed), trips_text(&computed));
    }
    Ok(())
}

fn vertex_set_text(set: &[(u32, u32)]) -> String {
    join(set.iter().map(|(a, b)| format!("{a},{b}")))
}

fn labeled_lows(bk: &BoxKite) -> String {
    join(Vertex::ALL.iter().map(|&v| bk.vertex(v).low()))
}

/// Set-level match of one printed kite against the found ones.
fn match_kite(ctx: &mut Ctx, id: String, anchor: &str, printed: &[(u32, u32)], found: &[BoxKite]) {
    let mut set = printed.to_vec();
    set.sort();
    let computed = match found.iter().find(|k| k.vertex_set() == set) {
        Some(k) => vertex_set_text(&k.vertex_set()),
        None => "no such box-kite".into(),
    };
    let expected = vertex_set_text(&set);
    ctx.compare(id, anchor, expected, computed);
}

fn pathion(ctx: &mut Ctx) -> Result<()> {
    const S8: &str = "s = 8: seven box-kites whose ABC sails carry each O-trip once";
    const LIFT: &str = "Adding 8 to each high index lifts a sedenion box-kite into the pathions";

    let f = ctx.fixture("pathion_s1_assessors");
    let record = f.records().next().ok_or(CliError::Fixture { id: f.id, line: 1, message: "empty".into() })?;
    let listed = record.fields().iter().map(|p| Fixture::pair(&record, p)).collect::<Result<Vec<_>>>()?;
    let mut sorted = listed.clone();
    sorted.sort();
    let computed: Vec<(u32, u32)> = emanation_assessors(5, 1)?.iter().map(|a| (a.low(), a.high())).collect();
    ctx.compare("s1/assessors", f.anchor(), vertex_set_text(&sorted), vertex_set_text(&computed));
    let nested = (0..listed.len() / 2).filter(|&i| listed[i].0 ^ listed[listed.len() - 1 - i].0 == 1).count();
    ctx.compare("s1/nesting", f.anchor(), "7 outer pairs are struts", format!("{nested} outer pairs are struts"));

    let f = ctx.fixture("pathion_s1_kites");
    let found = find_box_kites(5, 1)?;
    ctx.compare("s1/count", f.anchor(), f.records().count(), found.len());
    for (i, r) in f.records().enumerate() {
        let lows = r.numbers()?;
        if lows.len() != 6 {
            return Err(r.error("expected six low indices"));
        }
        let printed: Vec<(u32, u32)> = lows.iter().map(|&o| (o, o ^ 17)).collect();
        match_kite(ctx, format!("s1/row-{}", i + 1), f.anchor(), &printed, &found);
        if i == 0 {
            let base = pathion_lift(&build_box_kite(1)?)?;
            ctx.compare("s1/base-line", f.anchor(), join(&lows), labeled_lows(&base));
        }
    }

    let f = ctx.fixture("pathion_s9_kites");
    let found = find_box_kites(5, 9)?;
    ctx.compare("s9/count", f.anchor(), f.records().count(), found.len());
    for (i, r) in f.records().enumerate() {
        let printed = r.fields().iter().map(|p| Fixture::pair(&r, p)).collect::<Result<Vec<_>>>()?;
        if printed.len() != 6 {
            return Err(r.error("expected six assessors"));
        }
        match_kite(ctx, format!("s9/row-{}", i + 1), f.anchor(), &printed, &found);
    }
    let shared = found
        .iter()
        .filter(|k| {
            let (a, b) = (Assessor::new(5, 8, 17), Assessor::new(5, 1, 24));
            let (Ok(a), Ok(b)) = (a, b) else { return false };
            k.slot_of(&a).zip(k.slot_of(&b)).is_some_and(|(x, y)| x.strut_partner() == y)
        })
        .count();
    ctx.compare(
        "s9/shared-strut",
        f.anchor(),
        format!("{} of {} share strut (8, 17)-(1, 24)", found.len(), found.len()),
        format!("{shared} of {} share strut (8, 17)-(1, 24)", found.len()),
    );

    let found = find_box_kites(5, 8)?;
    let mut sails = found.iter().map(|k| Ok(sail_otrip(k, Sail::ABC)?.aso())).collect::<Result<Vec<Trip>>>()?;
    sails.sort();
    ctx.compare("s8/o-trips", S8, trip_list(&enumerate_trips(3, TripFilter::Octonion)?), trip_list(&sails));

    for (s, name, bk) in kites()? {
        let lifted = pathion_lift(&bk)?;
        let found = find_box_kites(5, s)?;
        let present = found.contains(&lifted);
        ctx.compare(
            format!("lift-{name}"),
            LIFT,
            "found with the same labeling",
            if present { "found with the same labeling" } else { "missing" },
        );
    }
    Ok(())
}

fn census_claims(ctx: &mut Ctx) -> Result<()> {
    let f = ctx.fixture("census_claims");
    let mut n = None;
    let mut ranges = Vec::new();
    let mut stated = None;
    let mut arithmetic = None;
    for r in f.records() {
        let fields = r.fields();
        match fields[..] {
            ["n", v] => n = Some(r.parse::<u32>(v)?),
            ["per-strut", range, count] => {
                let (a, b) = range.split_once('-').ok_or_else(|| r.error("expected a range"))?;
                ranges.push((r.parse::<u32>(a)?, r.parse::<u32>(b)?, r.parse::<usize>(count)?));
            }
            ["stated-total", v] => stated = Some(r.parse::<usize>(v)?),
            ["arithmetic-total", v] => arithmetic = Some(r.parse::<usize>(v)?),
            _ => return Err(r.error("unrecognized claim")),
        }
    }
    let missing = |what: &str| CliError::Fixture { id: f.id, line: 0, message: format!("missing {what}") };
    let n = n.ok_or_else(|| missing("n"))?;
    let stated = stated.ok_or_else(|| missing("stated-total"))?;
    let arithmetic = arithmetic.ok_or_else(|| missing("arithmetic-total"))?;
    let c = census(n)?;
    let mut claimed_sum = 0;
    for &(a, b, count) in &ranges {
        for s in a..=b {
            ctx.compare(format!("s{s}"), f.anchor(), count, c.count(s).map_or("none".into(), |x| x.to_string()));
            claimed_sum += count;
        }
    }
    let covered: usize = ranges.iter().map(|&(a, b, _)| (b - a + 1) as usize).sum();
    let per_strut_sum: usize = c.per_strut.iter().map(|&(_, k)| k).sum();
    let sums = if per_strut_sum == c.total() { "sum to" } else { "do not sum to" };
    ctx.compare(
        "self-consistent",
        f.anchor(),
        format!("{covered} strut constants whose counts sum to the total"),
        format!("{} strut constants whose counts {sums} the total", c.per_strut.len()),
    );
    ctx.compare("claims-arithmetic", f.anchor(), arithmetic, claimed_sum);
    for (id, claim) in [("total-vs-arithmetic", arithmetic), ("total-vs-stated", stated)] {
        let total = c.total();
        if claim == total {
            ctx.push(id.into(), f.anchor(), claim.to_string(), total.to_string(), Status::Pass, None);
        } else {
            let note = format!("published total {claim} disagrees with the enumerated {total}");
            ctx.push(id.into(), f.anchor(), claim.to_string(), total.to_string(), Status::Flagged, Some(note));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_names_round_trip() {
        for s in Section::ALL {
            assert_eq!(s.name().parse::<Section>().unwrap(), s);
        }
        assert_eq!(Section::parse_list("yard,mock,yard").unwrap(), vec![Section::Mock, Section::Yard]);
        assert!(Section::parse_list("nope").is_err());
    }

    #[test]
    fn each_fixture_belongs_to_one_section() {
        let mut owners: BTreeMap<&str, usize> = BTreeMap::new();
        for s in Section::ALL {
            for id in s.fixtures() {
                *owners.entry(id).or_default() += 1;
            }
        }
        assert_eq!(owners.len(), FIXTURES.len());
        assert!(owners.values().all(|&c| c == 1));
    }

    #[test]
    fn strut_table_section_passes() {
        let report = verify(&[Section::StrutTable]).unwrap();
        assert_eq!(report.summary.checks, 7);
        assert!(report.all_pass());
        assert_eq!(report.fixtures.get("strut_table"), Some(&1));
    }

    #[test]
    fn rack_equivalence_ignores_direction() {
        let r = Record { fixture: "t", line: 1, text: "A+D-F+C-" };
        let s = Record { fixture: "t", line: 1, text: "A-C+F-D+" };
        assert_eq!(cycle_edges(&parse_rack(&r).unwrap()), cycle_edges(&parse_rack(&s).unwrap()));
        assert!(is_square(&parse_rack(&r).unwrap()));
        let bad = Record { fixture: "t", line: 1, text: "A-C+F-E+" };
        assert!(!is_square(&parse_rack(&bad).unwrap()));
    }

    #[test]
    fn diagonal_terms_parse() {
        let r = Record { fixture: "t", line: 1, text: "" };
        assert_eq!(diagonal_term(&r, "3-10").unwrap().coeff(10), -1);
        assert!(diagonal_term(&r, "3").is_err());
    }
}
