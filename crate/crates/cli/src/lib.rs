//! Command-line front end. [`run`] parses arguments, reads presentations
//! from a file or stdin (`-`) and writes module results to the given
//! streams. Exit codes: 0 success, 1 domain error, 2 usage or parse error.

pub mod render;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use threepage::search::{self, DEFAULT_MAX_N};
use threepage::torus::{self, TorusParams};
use threepage::{format, moves, BraidWord, Error, InvariantProfile, PlanarDiagram, ThreePagePresentation};

use render::{Format, RenderSpec};

pub const MAX_N_ENV: &str = "THREEPAGE_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "threepage", version, about = "Three-page presentations of links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the presentation rules and list violations.
    Validate { input: String },
    /// Link components as cycles of arcs.
    Components { input: String },
    /// Build a torus-link presentation.
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Index bounds for T(p,q).
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Invariant profile of a presentation.
    Invariants {
        input: String,
        /// Print Jones polynomials in t = A^-4.
        #[arg(long)]
        t: bool,
    },
    /// Projected diagram in PD form.
    Diagram {
        input: String,
        /// Apply this many random Reidemeister moves first.
        #[arg(long, default_value_t = 0)]
        perturb: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report whether the Jones set survived the perturbation.
        #[arg(long)]
        check: bool,
    },
    /// Smallest point count presenting a target link.
    Search {
        #[command(flatten)]
        target: Target,
        #[arg(long = "max-n")]
        max_n: u32,
        /// Prune split pairs and require three arcs per component.
        #[arg(long)]
        non_split: bool,
    },
    /// Every canonical presentation with n points, grouped by profile.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Draw a presentation.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        #[arg(long)]
        no_point_labels: bool,
        #[arg(long)]
        page_labels: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Closure data for a braid word such as "s1 s2 -s1".
    Braid {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: u32,
        /// Also print the PD code of the closure.
        #[arg(long)]
        pd: bool,
        /// Compare against another word on the same strands.
        #[arg(long, allow_hyphen_values = true)]
        against: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// T(n,n) with 4n-2 arcs.
    Tnn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// T(p,q); --tight needs |q| >= 2|p|.
    Tpq {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long)]
        tight: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args, Debug)]
struct Target {
    /// Torus link given as P,Q.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true, conflicts_with_all = ["braid", "input"])]
    torus: Option<(i64, i64)>,
    /// Closure of a braid word; needs --strands.
    #[arg(long, requires = "strands", allow_hyphen_values = true, conflicts_with = "input")]
    braid: Option<String>,
    #[arg(long, requires = "braid")]
    strands: Option<u32>,
    /// Presentation file (or `-`).
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RenderFormat {
    Svg,
    Ascii,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
        }
    }

    fn presentation(&mut self, path: &str) -> Result<ThreePagePresentation, Failure> {
        Ok(format::parse_any(&self.read(path)?)?)
    }

    fn emit(&mut self, text: &str, to: Option<&PathBuf>) -> Result<(), Failure> {
        match to {
            Some(path) => std::fs::write(path, text)?,
            None => self.out.write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "usage error: {m}");
            2
        }
    }
}

fn max_n() -> Result<u32, Failure> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{MAX_N_ENV}={v} is not a point count"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn profile_text(prof: &InvariantProfile, t: bool) -> Result<String, Failure> {
    if !t {
        return Ok(format!("{prof}\n"));
    }
    let mut polys = Vec::new();
    for j in &prof.jones_set {
        polys.push(j.to_t_string().map_err(Failure::Domain)?);
    }
    let lk: Vec<String> = prof.abs_linking.iter().map(|v| v.to_string()).collect();
    Ok(format!(
        "components={} | |lk|={{{}}} | jones(t)={{{}}}\n",
        prof.component_count,
        lk.join(","),
        polys.join(", ")
    ))
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Failure> {
    match cmd {
        Command::Validate { input } => {
            let text = io.read(&input)?;
            let report = if text.trim_start().starts_with('{') {
                match format::from_json(&text) {
                    Ok(_) => threepage::ValidationReport::default(),
                    Err(Error::Invalid(r)) => r,
                    Err(e) => return Err(e.into()),
                }
            } else {
                threepage::validate(&format::parse_data(&text)?)
            };
            if report.is_ok() {
                writeln!(io.out, "ok")?;
                Ok(0)
            } else {
                write!(io.out, "{report}")?;
                if !report.to_string().ends_with('\n') {
                    writeln!(io.out)?;
                }
                Ok(1)
            }
        }
        Command::Components { input } => {
            let p = io.presentation(&input)?;
            let comps = p.components();
            writeln!(io.out, "components={}", comps.len())?;
            for (i, c) in comps.cycles.iter().enumerate() {
                let arcs: Vec<String> = c.arcs.iter().map(|a| a.to_string()).collect();
                writeln!(io.out, "{}: {} arcs: {}", i + 1, c.arcs.len(), arcs.join(" "))?;
            }
            if let Some((a, b)) = p.detect_split_pair() {
                writeln!(io.out, "split pair: {a} {b}")?;
            }
            Ok(0)
        }
        Command::Construct { which } => construct(which, io),
        Command::Bounds { p, q } => {
            let params = TorusParams::new(p, q)?;
            let b = torus::bounds(params.p, params.q)?;
            writeln!(io.out, "{b}")?;
            if params.mirror {
                writeln!(io.out, "mirror          yes")?;
            }
            Ok(0)
        }
        Command::Invariants { input, t } => {
            let p = io.presentation(&input)?;
            let prof = InvariantProfile::of_presentation(&p)?;
            let text = profile_text(&prof, t)?;
            io.out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Diagram { input, perturb, seed, check } => {
            let p = io.presentation(&input)?;
            let d = PlanarDiagram::project(&p);
            let moved = perturb_diagram(&d, perturb, seed)?;
            io.out.write_all(moved.to_pd_string().as_bytes())?;
            if check {
                let same = InvariantProfile::of_diagram(&d)? == InvariantProfile::of_diagram(&moved)?;
                writeln!(io.out, "jones preserved: {}", pass(same))?;
                return Ok(if same { 0 } else { 1 });
            }
            Ok(0)
        }
        Command::Search { target, max_n: n_max, non_split } => {
            let prof = target_profile(&target, io)?;
            let r = search::three_page_index_with_limit(&prof, n_max, non_split, max_n()?)?;
            for (n, count) in &r.examined {
                writeln!(io.out, "n={n} examined={count}")?;
            }
            match (r.n, r.witness) {
                (Some(n), Some(w)) => {
                    writeln!(io.out, "index={n}")?;
                    writeln!(io.out, "{}", format::serialize(&w))?;
                }
                _ => writeln!(io.out, "index>{n_max}")?,
            }
            Ok(0)
        }
        Command::Census { n, out } => {
            let entries = search::census_with_limit(n, max_n()?)?;
            io.emit(&search::census_text(&entries), out.as_ref())?;
            Ok(0)
        }
        Command::Render { input, format: f, scale, no_point_labels, page_labels, out } => {
            let p = io.presentation(&input)?;
            let spec = RenderSpec {
                format: match f {
                    RenderFormat::Svg => Format::Svg,
                    RenderFormat::Ascii => Format::Ascii,
                },
                scale,
                point_labels: !no_point_labels,
                page_labels,
            };
            let text = render::render(&p, &spec).map_err(Failure::Usage)?;
            io.emit(&text, out.as_ref())?;
            Ok(0)
        }
        Command::Braid { word, strands, pd, against } => {
            let w = braid_word(strands, &word)?;
            let d = w.closure();
            writeln!(io.out, "word            {w}")?;
            writeln!(io.out, "strands         {}", w.strands())?;
            writeln!(io.out, "length          {}", w.len())?;
            writeln!(io.out, "exponent_sum    {}", w.exponent_sum())?;
            writeln!(io.out, "cycles          {}", w.cycle_count())?;
            writeln!(io.out, "profile         {}", InvariantProfile::of_diagram(&d)?)?;
            if pd {
                io.out.write_all(d.to_pd_string().as_bytes())?;
            }
            if let Some(other) = against {
                let r = threepage::braid::verify_factorization(&w, &braid_word(strands, &other)?)?;
                writeln!(io.out, "{r}")?;
                return Ok(if r.passed() { 0 } else { 1 });
            }
            Ok(0)
        }
    }
}

fn braid_word(strands: u32, text: &str) -> Result<BraidWord, Failure> {
    BraidWord::parse(strands, text).map_err(|e| match e {
        Error::GeneratorOutOfRange { .. } => Failure::Domain(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    })
}

fn construct(which: Construction, io: &mut Io) -> Result<i32, Failure> {
    let (params, tight, verify, json) = match which {
        Construction::Tnn { n, verify, json } => (TorusParams::new(n.into(), n.into())?, false, verify, json),
        Construction::Tpq { p, q, tight, verify, json } => (TorusParams::new(p, q)?, tight, verify, json),
    };
    let pres = torus::construct(&params, tight)?;
    let text = if json { format::to_json(&pres) } else { format::serialize(&pres) };
    writeln!(io.out, "{text}")?;
    if !verify {
        return Ok(0);
    }
    let v = torus::verify(&pres, &params)?;
    let how = if v.exact { "exact" } else if v.up_to_mirror { "mirror image" } else { "no match" };
    writeln!(io.out, "verification {} ({how})", pass(v.up_to_mirror))?;
    Ok(if v.up_to_mirror { 0 } else { 1 })
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected P,Q, found `{s}`"))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("`{x}` is not an integer"));
    Ok((num(a)?, num(b)?))
}

fn target_profile(t: &Target, io: &mut Io) -> Result<InvariantProfile, Failure> {
    if let Some((p, q)) = t.torus {
        let params = TorusParams::new(p, q)?;
        return Ok(params.oracle_profile()?);
    }
    if let (Some(word), Some(strands)) = (&t.braid, t.strands) {
        return Ok(InvariantProfile::of_diagram(&braid_word(strands, word)?.closure())?);
    }
    if let Some(path) = &t.input {
        return Ok(InvariantProfile::of_presentation(&io.presentation(path)?)?);
    }
    Err(Failure::Usage("give one of --torus, --braid or --input".into()))
}

/// Applies `count` random Reidemeister moves: a move kind is drawn
/// uniformly among those with a site, then a site of that kind. Once the
/// diagram has grown by `slack` crossings only shrinking moves and R3 are
/// drawn.
pub fn perturb_diagram(d: &PlanarDiagram, count: usize, seed: u64) -> Result<PlanarDiagram, Error> {
    const SLACK: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = d.crossing_count() + SLACK;
    let mut cur = d.clone();
    for _ in 0..count {
        let full = cur.crossing_count() >= cap;
        let mut kinds: Vec<Vec<moves::Move>> = vec![Vec::new(); 5];
        for m in moves::sites(&cur) {
            let k = match m {
                moves::Move::R1Add { .. } => 0,
                moves::Move::R1Remove { .. } => 1,
                moves::Move::R2Add { .. } => 2,
                moves::Move::R2Remove { .. } => 3,
                moves::Move::R3 { .. } => 4,
            };
            if !(full && (k == 0 || k == 2)) {
                kinds[k].push(m);
            }
        }
        kinds.retain(|v| !v.is_empty());
        let Some(kind) = kinds.choose(&mut rng) else { break };
        let m = kind.choose(&mut rng).expect("kinds are non-empty");
        cur = moves::apply(&cur, m)?;
    }
    Ok(cur)
}
