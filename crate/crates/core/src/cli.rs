//! The `clband` command line.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use crate::arrangement::{intersect, jacobian, Arrangement};
use crate::chambers::{chambers_form_ideal, verify_deletion_restriction};
use crate::complex::{decompose, FaceComplex};
use crate::error::Error;
use crate::io::{curve_equation, faces_json, load_arrangement, point_json};
use crate::products::{
    associative_table, f_set, find_l21_embedding_obstruction, geometric_table,
    idempotents_match_l0, verify_alternative_lrb, verify_aperiodic_semigroup,
    weak_associativity_violation, ChoiceFunction, Obstruction, DEFAULT_REFINEMENT_DEPTH,
};
use crate::render;
use crate::restriction::{
    embedding_for, pointed_curve_lrb, restrict_in, verify_pointed_oval_independence,
};
use crate::semigroup::{
    check_closure, image_i, two_component_condition, AxiomReport, Closure, ProductTable,
};
use crate::sign::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Product {
    Geometric,
    Associative,
}

#[derive(Debug, Parser)]
#[command(
    name = "clband",
    version,
    about = "Faces, sign vectors and band products of conic-line arrangements"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Recorded in every output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Interval halvings allowed before a tie is reported as ambiguous.
    #[arg(
        long,
        global = true,
        env = "CLBAND_REFINEMENT_DEPTH",
        default_value_t = DEFAULT_REFINEMENT_DEPTH,
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    pub refinement_depth: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the input against the definition of an arrangement.
    Validate { input: PathBuf },
    /// Face decomposition and closure order.
    Faces { input: PathBuf },
    /// The image of the sign map, its fibers and the closure check.
    Signs { input: PathBuf },
    /// A product table with its axiom report.
    Table {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "geometric")]
        product: Product,
    },
    /// Every property check at once.
    Check { input: PathBuf },
    /// The pointed curve and embedding report for one component.
    Restrict {
        input: PathBuf,
        /// Label or 1-based index.
        #[arg(long)]
        component: String,
        /// Marked point to start an oval at, 1-based.
        #[arg(long)]
        start: Option<usize>,
    },
    /// Deletion-restriction chamber counts.
    Chambers { input: PathBuf },
    /// SVG picture, or the Hasse diagram with `--format dot`.
    Render { input: PathBuf },
}

/// Exit status and emitted text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_AMBIGUOUS: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AmbiguousTie(..) => EXIT_AMBIGUOUS,
        e if e.is_validation() => EXIT_INVALID,
        _ => EXIT_VIOLATION,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((violation, stdout)) => Outcome {
            code: if violation { EXIT_VIOLATION } else { EXIT_OK },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a parsed command; the flag reports a property violation.
pub fn execute(cli: &Cli) -> Result<(bool, String), Error> {
    let ctx = Ctx {
        format: cli.format,
        seed: cli.seed,
        depth: cli.refinement_depth,
    };
    match &cli.command {
        Command::Validate { input } => ctx.validate(&load_arrangement(input)?),
        Command::Faces { input } => ctx.faces(&decompose(&load_arrangement(input)?)),
        Command::Signs { input } => ctx.signs(&decompose(&load_arrangement(input)?)),
        Command::Table { input, product } => {
            ctx.table(&decompose(&load_arrangement(input)?), *product)
        }
        Command::Check { input } => ctx.check(&decompose(&load_arrangement(input)?)),
        Command::Restrict {
            input,
            component,
            start,
        } => {
            let arr = load_arrangement(input)?;
            let h = arr.index_of(component)?;
            ctx.restrict(&decompose(&arr), h, *start)
        }
        Command::Chambers { input } => ctx.chambers(&load_arrangement(input)?),
        Command::Render { input } => {
            let c = decompose(&load_arrangement(input)?);
            Ok((
                false,
                if cli.format == Format::Dot {
                    render::dot(&c)
                } else {
                    render::svg(&c)
                },
            ))
        }
    }
}

struct Ctx {
    format: Format,
    seed: u64,
    depth: u32,
}

impl Ctx {
    fn emit(&self, command: &str, body: Value, text: String) -> String {
        match self.format {
            Format::Json => {
                let mut v = json!({ "command": command, "seed": self.seed });
                if let (Some(m), Value::Object(b)) = (v.as_object_mut(), body) {
                    m.extend(b);
                }
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            _ => format!("{text}seed: {}\n", self.seed),
        }
    }

    fn validate(&self, arr: &Arrangement) -> Result<(bool, String), Error> {
        let mut text = format!("valid arrangement with {} curves\n", arr.len());
        let mut curves = Vec::new();
        for (i, c) in arr.curves().iter().enumerate() {
            let shape = format!("{:?}", arr.shape(i)).to_lowercase();
            writeln!(text, "  {}: {} ({shape})", c.label, curve_equation(c)).unwrap();
            curves.push(json!({ "label": c.label, "equation": curve_equation(c), "shape": shape }));
        }
        let mut points = Vec::new();
        for i in 0..arr.len() {
            for j in i + 1..arr.len() {
                for r in intersect(&arr.curves()[i], &arr.curves()[j])? {
                    let (a, b) = (&arr.curves()[i].label, &arr.curves()[j].label);
                    writeln!(
                        text,
                        "  {a} meets {b} at {} with multiplicity {}",
                        r.point.describe(),
                        r.multiplicity
                    )
                    .unwrap();
                    points.push(json!({ "curves": [a, b], "point": point_json(&r.point), "multiplicity": r.multiplicity, "tangential": r.tangential }));
                }
            }
        }
        Ok((
            false,
            self.emit(
                "validate",
                json!({ "valid": true, "curves": curves, "intersections": points }),
                text,
            ),
        ))
    }

    fn faces(&self, c: &FaceComplex) -> Result<(bool, String), Error> {
        if self.format == Format::Dot {
            return Ok((false, render::dot(c)));
        }
        let labels = c.arrangement().labels();
        let mut text = format!(
            "faces: {} (vertices {}, edges {}, chambers {})\n",
            c.len(),
            c.vertices().len(),
            c.edges().len(),
            c.chambers().len()
        );
        for f in c.faces() {
            let support: Vec<&str> = f.support.iter().map(|&k| labels[k].as_str()).collect();
            writeln!(
                text,
                "  f{} dim {} signs {} on [{}] {} sample {}",
                f.id,
                f.dim,
                f.signs,
                support.join(","),
                if f.bounded { "bounded" } else { "unbounded" },
                f.sample.describe()
            )
            .unwrap();
        }
        let covers: Vec<String> = c
            .hasse_edges()
            .iter()
            .map(|(a, b)| format!("f{a}<f{b}"))
            .collect();
        writeln!(text, "covers: {}", covers.join(" ")).unwrap();
        Ok((false, self.emit("faces", faces_json(c), text)))
    }

    fn signs(&self, c: &FaceComplex) -> Result<(bool, String), Error> {
        let l0 = image_i(c);
        let closure = check_closure(&l0);
        let mut text = format!("faces: {}\nsign vectors: {}\n", c.len(), l0.len());
        for (v, ids) in &l0.preimage {
            let fs: Vec<String> = ids.iter().map(|i| format!("f{i}")).collect();
            writeln!(text, "  {v} <- {}", fs.join(" ")).unwrap();
        }
        match &closure {
            Closure::Closed => text.push_str("closure: Closed\n"),
            Closure::Witness(u, v, w) => {
                writeln!(text, "closure: Witness {u} * {v} = {w}").unwrap()
            }
        }
        let body = json!({
            "faces": c.len(),
            "sign_vectors": l0.len(),
            "fibers": l0.preimage.iter().map(|(v, ids)| json!({ "signs": v, "faces": ids })).collect::<Vec<_>>(),
            "closure": match &closure {
                Closure::Closed => json!({ "status": "Closed" }),
                Closure::Witness(u, v, w) => json!({ "status": "Witness", "left": u, "right": v, "product": w }),
            },
            "two_component_condition": two_component_condition(c),
        });
        Ok((false, self.emit("signs", body, text)))
    }

    fn table(&self, c: &FaceComplex, product: Product) -> Result<(bool, String), Error> {
        let (t, report) = match product {
            Product::Geometric => {
                let t = geometric_table(c, self.depth)?;
                let r = verify_alternative_lrb(&t)?;
                (t, r)
            }
            Product::Associative => {
                let t = associative_table(c, &ChoiceFunction::canonical(c))?;
                let r = verify_aperiodic_semigroup(&t)?;
                (t, r)
            }
        };
        let mut text = grid(&t);
        writeln!(text, "axioms: {}", describe_report(&report, &t)).unwrap();
        writeln!(text, "associative: {}", t.is_associative()).unwrap();
        let body = json!({ "table": t, "axioms": report, "associative": t.is_associative() });
        Ok((!report.is_ok(), self.emit("table", body, text)))
    }

    fn check(&self, c: &FaceComplex) -> Result<(bool, String), Error> {
        let mut checks: Vec<(String, &str, String)> = Vec::new();
        let mut add = |name: &str, ok: Option<bool>, detail: String| {
            let status = match ok {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "info",
            };
            checks.push((name.to_string(), status, detail));
        };
        let arr = c.arrangement();
        let l0 = image_i(c);
        let two = two_component_condition(c);
        add("two-component condition", None, two.to_string());
        add(
            "sign map injective",
            arr.is_line_arrangement().then(|| l0.is_injective()),
            l0.is_injective().to_string(),
        );
        let closure = check_closure(&l0);
        let closed = closure == Closure::Closed;
        let detail = match &closure {
            Closure::Closed => "closed".to_string(),
            Closure::Witness(u, v, w) => format!("{u} * {v} = {w} is not a sign vector"),
        };
        add("L0 closed", two.then_some(closed), detail);
        if closed {
            let lt = l0.table()?;
            let r = lt.check_lrb_axioms()?;
            add("L0 band axioms", Some(r.is_ok()), format!("{r:?}"));
            add(
                "chambers form an ideal",
                Some(chambers_form_ideal(&l0)),
                String::new(),
            );
        }
        let n = c.len();
        let big = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| f_set(c, a, b).len() > 2);
        add(
            "candidate sets have at most two faces",
            Some(big.is_none()),
            format!("{big:?}"),
        );
        let gt = geometric_table(c, self.depth)?;
        let r = verify_alternative_lrb(&gt)?;
        add(
            "geometric product alternative band",
            Some(r.is_ok()),
            describe_report(&r, &gt),
        );
        let assoc = gt.find_associativity_violation();
        let expect_assoc = arr.is_line_arrangement() || all_transversal(c);
        add(
            "geometric product associative",
            expect_assoc.then_some(assoc.is_none()),
            assoc
                .map(|(x, y, z)| format!("f{x} f{y} f{z}"))
                .unwrap_or_else(|| "yes".into()),
        );
        let weak = weak_associativity_violation(c, &gt);
        add(
            "weak associativity envelope",
            Some(weak.is_none()),
            format!("{weak:?}"),
        );
        let items = proposition_items(c, &gt);
        add(
            "candidate set properties",
            Some(items.is_none()),
            items.unwrap_or_default(),
        );
        let ob = find_l21_embedding_obstruction(&gt)?;
        let ob_text = match ob {
            Obstruction::NoObstructionFound => "none found".to_string(),
            Obstruction::Certificate { a, b, c, d } => format!("a=f{a} b=f{b} c=f{c} d=f{d}"),
        };
        add("embedding obstruction", None, ob_text);
        if closed {
            let at = associative_table(c, &ChoiceFunction::canonical(c))?;
            let r = verify_aperiodic_semigroup(&at)?;
            add(
                "associative product aperiodic band laws",
                Some(r.is_ok()),
                describe_report(&r, &at),
            );
            add(
                "idempotents isomorphic to L0",
                Some(idempotents_match_l0(c, &at)),
                String::new(),
            );
        }
        for row in verify_deletion_restriction(arr)? {
            let ok = row.identity_holds && row.splits_hold;
            add(
                &format!("chamber identity via {}", row.label),
                row.connected.then_some(ok),
                format!(
                    "{} = {} + {}{}",
                    row.chambers,
                    row.deleted_chambers,
                    row.classes,
                    if row.connected {
                        ""
                    } else if ok {
                        " (disconnected curve)"
                    } else {
                        " fails (disconnected curve, not claimed)"
                    }
                ),
            );
            if let Some(z) = row.zaslavsky {
                add(
                    &format!("line formula via {}", row.label),
                    Some(z),
                    String::new(),
                );
            }
        }
        let violation = checks.iter().any(|c| c.1 == "fail");
        let mut text = String::new();
        for (name, status, detail) in &checks {
            writeln!(text, "{:<4} {name}: {detail}", status.to_uppercase()).unwrap();
        }
        let body = json!({
            "checks": checks.iter().map(|(n, s, d)| json!({ "name": n, "status": s, "detail": d })).collect::<Vec<_>>(),
            "violation": violation,
        });
        Ok((violation, self.emit("check", body, text)))
    }

    fn restrict(
        &self,
        c: &FaceComplex,
        h: usize,
        start: Option<usize>,
    ) -> Result<(bool, String), Error> {
        let mut pc = restrict_in(c, h)?;
        if let Some(s) = start {
            if s == 0 || s > pc.k() {
                return Err(Error::InvalidIndex(s));
            }
            pc = pc.rotate_start(s - 1, c);
        }
        let lrb = pointed_curve_lrb(&pc);
        let report = embedding_for(c, &pc)?;
        let label = &c.arrangement().curves()[h].label;
        let mut text = format!(
            "curve {label}: {} marked points, {}\n",
            pc.k(),
            if pc.closed { "oval" } else { "unbounded" }
        );
        for (i, s) in pc.samples.iter().enumerate() {
            writeln!(text, "  p{} = f{} at {}", i + 1, pc.points[i], s.describe()).unwrap();
        }
        if let Some(r) = &pc.removed_point {
            writeln!(
                text,
                "  removed point in f{} at {}",
                pc.removed_arc.unwrap(),
                r.describe()
            )
            .unwrap();
        }
        text.push_str("phi:\n");
        for e in &report.phi {
            writeln!(
                text,
                "  {} -> f{} {}",
                if e.domain.is_empty() {
                    "()".into()
                } else {
                    e.domain.to_string()
                },
                e.face,
                e.image
            )
            .unwrap();
        }
        text.push_str("laws:\n");
        for (j, law) in report.laws.iter().enumerate() {
            writeln!(text, "  {}: {law:?}", c.arrangement().curves()[j].label).unwrap();
        }
        writeln!(text, "distinct images: {}", report.injective_on_vectors).unwrap();
        if let Some(iso) = report.isomorphism {
            writeln!(text, "isomorphism: {iso}").unwrap();
        }
        let independence = verify_pointed_oval_independence(&pc);
        if pc.closed {
            writeln!(text, "removed point independence: {independence:?}").unwrap();
        }
        let body = json!({
            "component": label,
            "pointed_lrb": lrb.elements,
            "removed_point": pc.removed_point.as_ref().map(point_json),
            "report": report,
            "removed_point_independence": independence,
        });
        let violation = report.isomorphism == Some(false);
        Ok((violation, self.emit("restrict", body, text)))
    }

    fn chambers(&self, arr: &Arrangement) -> Result<(bool, String), Error> {
        let rows = verify_deletion_restriction(arr)?;
        let mut text = String::from("curve  C(A)  C(A^H)  C(A_H)  b(H)  identity\n");
        for r in &rows {
            writeln!(
                text,
                "{:<6} {:>4}  {:>6}  {:>6}  {:>4}  {} = {} + {} {}",
                r.label,
                r.chambers,
                r.deleted_chambers,
                r.sections,
                r.classes,
                r.chambers,
                r.deleted_chambers,
                r.classes,
                match (r.identity_holds && r.splits_hold, r.connected) {
                    (true, _) => "holds".to_string(),
                    (false, connected) => format!(
                        "{} (class graph cycle rank {})",
                        if connected {
                            "FAILS"
                        } else {
                            "fails, not claimed for a disconnected curve"
                        },
                        r.splits.iter().map(|s| s.cycle_rank).sum::<usize>()
                    ),
                }
            )
            .unwrap();
        }
        let violation = rows
            .iter()
            .any(|r| !r.holds_where_claimed() || r.zaslavsky == Some(false));
        Ok((
            violation,
            self.emit("chambers", json!({ "rows": rows }), text),
        ))
    }
}

/// Every vertex is a transversal crossing of exactly two curves.
fn all_transversal(c: &FaceComplex) -> bool {
    let polys = c.arrangement().polys();
    c.vertices().iter().all(|v| {
        v.support.len() == 2
            && v.sample
                .sign_at(&jacobian(&polys[v.support[0]], &polys[v.support[1]]))
                != Sign::Zero
    })
}

/// The first failure among: `P1 ≠ P2` not both in `F`, `P1 ∈ F ⇒ P1·P2 = P1`, `P1 ≺ P2 ⇒ P1·P2 = P2`.
pub fn proposition_items(c: &FaceComplex, t: &ProductTable) -> Option<String> {
    let n = c.len();
    for a in 0..n {
        for b in 0..n {
            let f = f_set(c, a, b);
            if a != b && f.contains(&a) && f.contains(&b) {
                return Some(format!("f{a} and f{b} both in F"));
            }
            if f.contains(&a) && t.mul(a, b) != a {
                return Some(format!("f{a} in F(f{a}, f{b}) but product differs"));
            }
            if a != b && c.le(a, b) && t.mul(a, b) != b {
                return Some(format!("f{a} below f{b} but product differs"));
            }
        }
    }
    None
}

fn describe_report(r: &AxiomReport, t: &ProductTable) -> String {
    match r {
        AxiomReport::Ok => "ok".into(),
        AxiomReport::Violation { axiom, witness } => {
            let w: Vec<&str> = witness.iter().map(|&i| t.labels[i].as_str()).collect();
            format!("{axiom:?} fails at {}", w.join(" "))
        }
    }
}

/// Human-readable multiplication grid.
pub fn grid(t: &ProductTable) -> String {
    let w = t.labels.iter().map(|l| l.len()).max().unwrap_or(1).max(1);
    let mut s = format!("{:>w$} |", "*");
    for l in &t.labels {
        write!(s, " {l:>w$}").unwrap();
    }
    s.push('\n');
    writeln!(s, "{}", "-".repeat((w + 1) * (t.len() + 1) + 1)).unwrap();
    for (i, row) in t.table.iter().enumerate() {
        write!(s, "{:>w$} |", t.labels[i]).unwrap();
        for &e in row {
            write!(s, " {:>w$}", t.labels[e]).unwrap();
        }
        s.push('\n');
    }
    s
}
