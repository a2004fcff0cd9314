//! Verification campaigns over enumerated graphs and generated families.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_form_with_ceiling, CanonicalForm};
use crate::classifier::{classify_with_i, recognize_shape, ExtremalClass};
use crate::error::Result;
use crate::generators::{
    fcubic_connection_audit, fcubic_specs, generate, sporadic, FamilySpec, LabeledGraph,
};
use crate::graph::Graph;
use crate::halver::{half_bound_id_set_with, HalverConfig};
use crate::io::to_graph6;
use crate::solver::{self, SolverOptions};

use super::{enumerate_connected_cubic_with, enumerate_connected_subcubic_with, DEFAULT_CEILING};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Fail,
    Exception,
    Extremal,
    Pass,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Fail => "FAIL",
            Status::Exception => "EXCEPTION",
            Status::Extremal => "EXTREMAL",
            Status::Pass => "PASS",
        })
    }
}

/// One line of a campaign: status, the graph in graph6, and a detail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Record {
    pub status: Status,
    pub graph6: String,
    pub detail: String,
}

impl Record {
    fn new(status: Status, g: &Graph, detail: impl Into<String>) -> Self {
        Record {
            status,
            graph6: to_graph6(g),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub name: String,
    pub n_range: (usize, usize),
    pub examined: usize,
    /// Every record, sorted by status then graph6.
    pub records: Vec<Record>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CampaignReport {
    pub fn violations(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(move |r| r.status == status)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Summary followed by the violations, for humans.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let fails = self.violations().count();
        let _ = writeln!(s, "campaign: {}", self.name);
        let _ = writeln!(s, "orders: {}..={}", self.n_range.0, self.n_range.1);
        let _ = writeln!(s, "graphs examined: {}", self.examined);
        let _ = writeln!(s, "violations: {fails}");
        for status in [Status::Exception, Status::Extremal] {
            let c = self.with_status(status).count();
            if c > 0 {
                let _ = writeln!(s, "{}: {c}", status.to_string().to_lowercase());
            }
        }
        let _ = writeln!(s, "elapsed: {:.3}s", self.elapsed.as_secs_f64());
        for note in &self.notes {
            let _ = writeln!(s, "note: {note}");
        }
        for r in self.with_status(Status::Exception) {
            let _ = writeln!(s, "exception {}: {}", r.graph6, r.detail);
        }
        for r in self.violations() {
            let _ = writeln!(s, "violation {}: {}", r.graph6, r.detail);
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }

    /// `STATUS<TAB>graph6<TAB>detail`, one line per record.
    pub fn render_records(&self) -> String {
        self.records
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.status, r.graph6, r.detail))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub min_n: usize,
    pub max_n: usize,
    /// Enumeration ceiling; `max_n` above it is a capacity error.
    pub ceiling: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Halver variant under test (fault injection for negative controls).
    pub halver: HalverConfig,
}

impl CampaignConfig {
    pub fn up_to(max_n: usize) -> Self {
        CampaignConfig {
            min_n: 2,
            max_n,
            ceiling: DEFAULT_CEILING.max(max_n.min(crate::canon::MAX_CEILING)),
            workers: None,
            halver: HalverConfig::default(),
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

fn finish(
    name: &str,
    range: (usize, usize),
    examined: usize,
    mut records: Vec<Record>,
    notes: Vec<String>,
    start: Instant,
) -> CampaignReport {
    records.sort();
    CampaignReport {
        name: name.to_string(),
        n_range: range,
        examined,
        records,
        notes,
        elapsed: start.elapsed(),
    }
}

fn half_bound_check(g: &Graph, halver: &HalverConfig) -> Result<Record> {
    let n = g.n();
    let i = solver::id_number(g)?;
    let mut problems = Vec::new();
    if 2 * i > n {
        problems.push(format!("i={i} exceeds n/2"));
    }
    let detail = match half_bound_id_set_with(g, halver) {
        Ok(cert) => {
            let check = g.is_id_set(&cert.set);
            if !check.independent {
                problems.push(format!("halver set {} is not independent", cert.set));
            }
            if !check.dominating {
                problems.push(format!("halver set {} is not dominating", cert.set));
            }
            if cert.size > n / 2 {
                problems.push(format!("halver size {} exceeds {}", cert.size, n / 2));
            }
            if check.is_id_set() && cert.size < i {
                problems.push(format!("halver size {} below i={i}", cert.size));
            }
            format!("i={i} halver={} budget={}", cert.size, n / 2)
        }
        Err(e) => {
            problems.push(format!("halver failed: {e}"));
            format!("i={i}")
        }
    };
    Ok(if problems.is_empty() {
        Record::new(Status::Pass, g, detail)
    } else {
        Record::new(
            Status::Fail,
            g,
            format!("{detail}; {}", problems.join("; ")),
        )
    })
}

/// Exact `i` and the halver both stay within `⌊n/2⌋` on every connected
/// subcubic graph in the range.
pub fn campaign_half_bound(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    cfg.run(|| {
        let mut records = Vec::new();
        let mut examined = 0;
        for n in cfg.min_n.max(2)..=cfg.max_n {
            let graphs = enumerate_connected_subcubic_with(n, cfg.ceiling)?;
            examined += graphs.len();
            let batch: Vec<Record> = graphs
                .par_iter()
                .map(|g| half_bound_check(g, &cfg.halver))
                .collect::<Result<_>>()?;
            records.extend(batch);
        }
        Ok(finish(
            "half-bound",
            (cfg.min_n.max(2), cfg.max_n),
            examined,
            records,
            Vec::new(),
            start,
        ))
    })
}

/// Canonical forms of the graphs the characterization lists at order `n`.
pub fn expected_extremal(n: usize) -> Vec<(ExtremalClass, CanonicalForm)> {
    let mut out = Vec::new();
    for id in 1..=5u8 {
        let g = sporadic(id).expect("valid id").graph;
        if g.n() == n {
            out.push((
                ExtremalClass::Sporadic(id),
                canonical_form(&g).expect("small"),
            ));
        }
    }
    if n.is_multiple_of(2) && n >= 2 {
        let k = n / 2;
        let form = |spec: FamilySpec| {
            let g = generate(&spec).expect("valid corona").graph;
            canonical_form_with_ceiling(&g, crate::canon::MAX_CEILING).expect("small")
        };
        out.push((
            ExtremalClass::CoronaPath(k),
            form(FamilySpec::CoronaPath { k }),
        ));
        if k >= 3 {
            out.push((
                ExtremalClass::CoronaCycle(k),
                form(FamilySpec::CoronaCycle { k }),
            ));
        }
    }
    out
}

fn characterization_check(g: &Graph) -> Result<Record> {
    let n = g.n();
    let (class, i) = classify_with_i(g)?;
    let shape = recognize_shape(g)?;
    let i_text = i.map_or("i not needed (odd n)".to_string(), |i| format!("i={i}"));
    if class == ExtremalClass::ExtremalUncharacterized {
        return Ok(Record::new(
            Status::Fail,
            g,
            format!("{i_text} = n/2 but no extremal shape matches"),
        ));
    }
    if let Some(shape) = shape {
        let i = match i {
            Some(i) => i,
            None => solver::id_number(g)?,
        };
        if 2 * i != n {
            return Ok(Record::new(
                Status::Fail,
                g,
                format!("shape {shape} but i={i} differs from n/2"),
            ));
        }
        return Ok(Record::new(Status::Extremal, g, format!("{class} i={i}")));
    }
    Ok(Record::new(Status::Pass, g, format!("{class} {i_text}")))
}

/// Every connected subcubic graph with `i = n/2` has one of the listed
/// shapes, every listed shape has `i = n/2`, and at each order the
/// extremal graphs are exactly the listed ones.
pub fn campaign_characterization(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    cfg.run(|| {
        let mut records = Vec::new();
        let mut examined = 0;
        for n in cfg.min_n.max(2)..=cfg.max_n {
            let graphs = enumerate_connected_subcubic_with(n, cfg.ceiling)?;
            examined += graphs.len();
            let batch: Vec<Record> = graphs
                .par_iter()
                .map(characterization_check)
                .collect::<Result<_>>()?;
            let found: BTreeSet<CanonicalForm> = graphs
                .iter()
                .zip(&batch)
                .filter(|(_, r)| r.status == Status::Extremal)
                .map(|(g, _)| canonical_form_with_ceiling(g, cfg.ceiling))
                .collect::<Result<_>>()?;
            let expected = expected_extremal(n);
            for (class, form) in &expected {
                if !found.contains(form) {
                    records.push(Record::new(
                        Status::Fail,
                        &form.to_graph(),
                        format!("expected extremal graph {class} was not found at n={n}"),
                    ));
                }
            }
            let expected_forms: BTreeSet<_> = expected.into_iter().map(|(_, f)| f).collect();
            for form in found.difference(&expected_forms) {
                records.push(Record::new(
                    Status::Fail,
                    &form.to_graph(),
                    format!("extremal graph at n={n} is not on the expected list"),
                ));
            }
            records.extend(batch);
        }
        Ok(finish(
            "characterization",
            (cfg.min_n.max(2), cfg.max_n),
            examined,
            records,
            Vec::new(),
            start,
        ))
    })
}

fn conjecture_check(g: &Graph, k33: &CanonicalForm, prism: &CanonicalForm) -> Result<Vec<Record>> {
    let n = g.n();
    let i = solver::id_number(g)?;
    let form = canonical_form_with_ceiling(g, crate::canon::MAX_CEILING)?;
    let is_k33 = form == *k33;
    let is_prism = form == *prism;
    let mut out = Vec::new();
    // i <= 2n/5 for every connected cubic graph except K_{3,3}.
    if 5 * i > 2 * n {
        if is_k33 {
            out.push(Record::new(
                Status::Exception,
                g,
                format!("K_{{3,3}}: i={i} > 2n/5, allowed exception to the 2n/5 bound"),
            ));
        } else {
            out.push(Record::new(
                Status::Fail,
                g,
                format!("i={i} > 2n/5 = {}/5", 2 * n),
            ));
        }
    }
    // i <= 3n/8 except K_{3,3} and the 5-prism.
    if 8 * i > 3 * n {
        if is_k33 || is_prism {
            let name = if is_k33 { "K_{3,3}" } else { "C_5 x K_2" };
            out.push(Record::new(
                Status::Exception,
                g,
                format!("{name}: i={i} > 3n/8, allowed exception to the 3n/8 bound"),
            ));
        } else {
            out.push(Record::new(
                Status::Fail,
                g,
                format!("i={i} > 3n/8 = {}/8", 3 * n),
            ));
        }
    }
    if out.is_empty() {
        out.push(Record::new(Status::Pass, g, format!("i={i} n={n}")));
    }
    Ok(out)
}

/// The 2n/5 bound (except `K_{3,3}`) and the 3n/8 bound (except `K_{3,3}`
/// and the 5-prism) on every connected cubic graph in the range.
pub fn campaign_conjecture(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let k33 = canonical_form(&sporadic(2)?.graph)?;
    let prism = canonical_form(&generate(&FamilySpec::Prism5)?.graph)?;
    cfg.run(|| {
        let mut records = Vec::new();
        let mut examined = 0;
        let lo = cfg.min_n.max(4);
        for n in lo..=cfg.max_n {
            let graphs = enumerate_connected_cubic_with(n, cfg.ceiling)?;
            examined += graphs.len();
            let batch: Vec<Vec<Record>> = graphs
                .par_iter()
                .map(|g| conjecture_check(g, &k33, &prism))
                .collect::<Result<_>>()?;
            records.extend(batch.into_iter().flatten());
        }
        let notes = vec![format!(
            "exhaustive over connected cubic graphs of order {lo}..={} only; larger orders are not covered",
            cfg.max_n
        )];
        Ok(finish(
            "conjecture",
            (lo, cfg.max_n),
            examined,
            records,
            notes,
            start,
        ))
    })
}

fn fcubic_check(member: &LabeledGraph) -> Result<Record> {
    let g = &member.graph;
    let n = g.n();
    let mut problems = Vec::new();
    if let Err(e) = fcubic_connection_audit(member) {
        problems.push(e.to_string());
    }
    if !n.is_multiple_of(8) || n < 16 {
        problems.push(format!(
            "order {n} is not a multiple of 8 that is at least 16"
        ));
    }
    let cert = solver::min_id_set_with(g, &SolverOptions { parallel: true })?;
    if 8 * cert.size != 3 * n {
        problems.push(format!("i={} differs from 3n/8", cert.size));
    }
    if problems.is_empty() {
        for set in solver::all_min_id_sets(g)? {
            let cert = solver::IdCertificate::new(set, solver::Provenance::Exact);
            let counts = solver::per_copy_intersection(member, &cert)?;
            if counts.iter().any(|&c| c != 3) {
                problems.push(format!(
                    "minimum set {} has per-copy counts {counts:?}",
                    cert.set
                ));
                break;
            }
        }
    }
    let detail = format!("{} i={} n={n}", member.spec, cert.size);
    Ok(if problems.is_empty() {
        Record::new(Status::Pass, g, detail)
    } else {
        Record::new(
            Status::Fail,
            g,
            format!("{detail}; {}", problems.join("; ")),
        )
    })
}

/// Audit, solve and check per-copy counts for the given family members.
pub fn campaign_fcubic_members(members: &[LabeledGraph]) -> Result<CampaignReport> {
    let start = Instant::now();
    let records = members
        .iter()
        .map(fcubic_check)
        .collect::<Result<Vec<_>>>()?;
    let orders = members.iter().map(|m| m.graph.n());
    let range = (orders.clone().min().unwrap_or(0), orders.max().unwrap_or(0));
    Ok(finish(
        "fcubic",
        range,
        members.len(),
        records,
        Vec::new(),
        start,
    ))
}

/// Every F_cubic member (all colorings, all red pairings) with base cycle
/// length `2..=max_k`.
pub fn campaign_fcubic(max_k: usize) -> Result<CampaignReport> {
    let members = (2..=max_k)
        .flat_map(fcubic_specs)
        .map(|spec| generate(&spec))
        .collect::<Result<Vec<_>>>()?;
    campaign_fcubic_members(&members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_render() {
        let report = campaign_half_bound(&CampaignConfig::up_to(4)).unwrap();
        assert!(report.passed());
        assert_eq!(report.examined, 1 + 2 + 6);
        let lines = report.render_records();
        assert_eq!(lines.lines().count(), report.examined);
        assert!(lines.lines().all(|l| l.split('\t').count() == 3));
        assert!(report.render_text().contains("result: PASS"));
    }

    #[test]
    fn expected_lists() {
        let four: Vec<_> = expected_extremal(4).into_iter().map(|(c, _)| c).collect();
        assert_eq!(
            four,
            vec![ExtremalClass::Sporadic(1), ExtremalClass::CoronaPath(2)]
        );
        assert_eq!(expected_extremal(6).len(), 6);
        assert_eq!(expected_extremal(8).len(), 2);
    }
}
