//! Argument parsing and dispatch for the `fvec` binary. Everything goes
//! through [`run`] so tests can drive the exact code path the binary uses.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fvec_core::combinat::{
    adapter_glue, adapter_witness, connected_sum, face_lattice, glue_in_simplex_facet,
    simple_vertices, simplex_facets, PolytopeJson, VertexFacetPolytope, VertexSet,
};
use fvec_core::constructions::{
    direct_sum_fvector, join_fvector, join_polygons_fvector, pkd_fvector, pklm_fvector,
    product_fvector, pyramid_fvector, skd_fvector, PklmParams,
};
use fvec_core::dim4::{
    approximate_semigroup_check, closure_report, necessary_conditions_4, FVectorDataset,
};
use fvec_core::fvec::{parse_integer_list, reduced_add, FVec, Reduction, ReductionBase};
use fvec_core::lattice::{
    build_m_matrix, build_n_matrix, ds_lattice_member, euler_lattice_member,
    triangularize_by_row_subtraction, IntegerMatrix,
};
use fvec_core::monoid::{
    euler_monoid_hilbert_basis, euler_monoid_violation, hilbert_basis_bruteforce,
    polygon_violation, steinitz_violation, GeneratorSet,
};
use fvec_core::simplicial::{
    f_to_g, g_to_f, is_m_sequence, macaulay_pseudopower, simplicial_violation, GSolution, GVec,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

type V = FVec<BigInt>;

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "fvec",
    version,
    about = "Exact computations with f-vectors of polytopes"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f-vectors of named families and of the standard operators.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Decide membership of a vector in one of the known sets.
    Member {
        #[arg(long, value_enum)]
        class: Class,
        vector: String,
    },
    /// Reduced addition of two f-vectors.
    Add {
        #[arg(long, value_enum)]
        op: Op,
        x: String,
        y: String,
    },
    /// The f-vector matrix of a family and its triangular form.
    Matrix {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        d: usize,
    },
    /// Hilbert basis of the Euler monoid, optionally checked by enumeration.
    Hilbert {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        bruteforce_radius: Option<u32>,
    },
    /// Glue two polytopes read from JSON files.
    Glue {
        #[arg(value_enum)]
        how: GlueKind,
        p: PathBuf,
        q: PathBuf,
        /// Vertex of P to delete or truncate.
        #[arg(long)]
        vertex: Option<usize>,
        /// Simplex facet of P, as a vertex list.
        #[arg(long)]
        facet1: Option<String>,
        /// Simplex facet of Q, as a vertex list.
        #[arg(long)]
        facet2: Option<String>,
        /// Write the glued polytope here as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// f-vector of a polytope read from a JSON file.
    Fvector { p: PathBuf },
    /// Pairs of dataset members whose reduced sum is missing from the dataset.
    ClosureReport {
        /// Dataset JSON file; the built-in 4-dimensional list by default.
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// Pairs whose vertex-facet reduced sum has no nearby dataset member.
    ApproxCheck {
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Sample simplicial f-vectors and check that box sums stay simplicial.
    GCheck {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Upper bound on sampled g-entries.
        #[arg(long, default_value_t = 20)]
        max_entry: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Join of a simplex with a direct sum of two simplices.
    Pklm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
    },
    Pkd {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    Skd {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    Product {
        x: String,
        y: String,
    },
    Join {
        x: String,
        y: String,
    },
    Sum {
        x: String,
        y: String,
    },
    Pyramid {
        x: String,
    },
    JoinPolygons {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    EulerMonoid,
    Steinitz,
    Polygon,
    Simplicial,
    EulerLattice,
    DsLattice,
    #[value(name = "filter4")]
    Filter4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Box,
    BoxPrime,
    BoxDblprime,
}

impl Op {
    fn reduction(self) -> Reduction {
        match self {
            Op::Box => Reduction::Simplex,
            Op::BoxPrime => Reduction::SimplexFacetSphere,
            Op::BoxDblprime => Reduction::VertexFacet,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "N")]
    N,
    #[value(name = "M")]
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum GlueKind {
    Adapter,
    SimplexFacet,
    ConnectedSum,
}

type CmdResult = Result<String, String>;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn vector(s: &str) -> Result<V, String> {
    s.parse().map_err(err)
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn set_threads() {
    if let Some(n) = std::env::var("FVEC_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // Fails harmlessly if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    set_threads();
    match dispatch(cli.command, cli.json) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome {
                code: 0,
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(msg) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cmd: Command, json: bool) -> CmdResult {
    match cmd {
        Command::Construct { what } => construct(what, json),
        Command::Member { class, vector: v } => member(class, &vector(&v)?, json),
        Command::Add { op, x, y } => add(op, &vector(&x)?, &vector(&y)?, json),
        Command::Matrix { which, d } => matrix(which, d, json),
        Command::Hilbert {
            d,
            bruteforce_radius,
        } => hilbert(d, bruteforce_radius, json),
        Command::Glue {
            how,
            p,
            q,
            vertex,
            facet1,
            facet2,
            out,
        } => glue(
            how,
            &p,
            &q,
            vertex,
            facet1.as_deref(),
            facet2.as_deref(),
            out.as_deref(),
            json,
        ),
        Command::Fvector { p } => {
            let f: V = face_lattice(&load_polytope(&p)?)
                .map_err(err)?
                .fvector()
                .map_err(err)?;
            Ok(if json { to_json(&f) } else { f.to_string() })
        }
        Command::ClosureReport { dataset, op } => {
            let ds = load_dataset(dataset.as_deref())?;
            let base = ReductionBase::new(op.reduction(), ds.dim()).map_err(err)?;
            let report = closure_report(&ds, &base).map_err(err)?;
            if json {
                return Ok(report.to_json());
            }
            let mut out = format!(
                "{}: {} pairs checked, {} sums absent\n",
                report.base,
                report.pairs_checked,
                report.absent_sums.len()
            );
            for s in &report.absent_sums {
                out += &format!("{} + {} -> {}\n", s.x, s.y, s.sum);
            }
            Ok(out)
        }
        Command::ApproxCheck { dataset } => {
            let ds = load_dataset(dataset.as_deref())?;
            let report = approximate_semigroup_check(&ds).map_err(err)?;
            if json {
                return Ok(report.to_json());
            }
            let mut out = format!(
                "{} pairs checked, {} unmatched\n",
                report.pairs_checked,
                report.unmatched.len()
            );
            for s in &report.unmatched {
                out += &format!("{} + {} = {}\n", s.x, s.y, s.sum);
            }
            Ok(out)
        }
        Command::GCheck {
            d,
            samples,
            max_entry,
            seed,
        } => g_check(d, samples, max_entry, seed, json),
    }
}

fn construct(what: Construct, json: bool) -> CmdResult {
    let f: V = match what {
        Construct::Pklm { k, l, m } => pklm_fvector(PklmParams::new(k, l, m).map_err(err)?),
        Construct::Pkd { k, d } => pkd_fvector(k, d).map_err(err)?.truncate(),
        Construct::Skd { k, d } => skd_fvector(k, d).map_err(err)?.truncate(),
        Construct::Product { x, y } => product_fvector(&vector(&x)?, &vector(&y)?),
        Construct::Join { x, y } => join_fvector(&vector(&x)?, &vector(&y)?),
        Construct::Sum { x, y } => direct_sum_fvector(&vector(&x)?, &vector(&y)?),
        Construct::Pyramid { x } => pyramid_fvector(&vector(&x)?),
        Construct::JoinPolygons { n } => join_polygons_fvector(n).map_err(err)?,
    };
    Ok(if json { to_json(&f) } else { f.to_string() })
}

fn member(class: Class, f: &V, json: bool) -> CmdResult {
    if let Class::Filter4 = class {
        let report = necessary_conditions_4(f).map_err(err)?;
        return Ok(if json {
            report.to_json().to_string()
        } else {
            report.to_string()
        });
    }
    let violation: Option<String> = match class {
        Class::EulerMonoid => euler_monoid_violation(f),
        Class::Steinitz => steinitz_violation(f).map_err(err)?.map(String::from),
        Class::Polygon => polygon_violation(f).map_err(err)?.map(String::from),
        Class::Simplicial => simplicial_violation(f),
        Class::EulerLattice => {
            (!euler_lattice_member(f)).then(|| "not on the Euler hyperplane".into())
        }
        Class::DsLattice => {
            (!ds_lattice_member(f)).then(|| "not in the Dehn-Sommerville lattice".into())
        }
        Class::Filter4 => unreachable!("handled above"),
    };
    if json {
        return Ok(to_json(&json!({
            "vector": f,
            "member": violation.is_none(),
            "violation": violation,
        })));
    }
    Ok(match violation {
        None => "true".into(),
        Some(v) => format!("false: {v}"),
    })
}

fn add(op: Op, x: &V, y: &V, json: bool) -> CmdResult {
    let base = ReductionBase::new(op.reduction(), x.dim()).map_err(err)?;
    let r = reduced_add(x, y, &base).map_err(err)?;
    Ok(if json {
        to_json(&json!({"op": op.reduction().name(), "sum": r.vector, "candidate": r.candidate}))
    } else {
        r.vector.to_string()
    })
}

fn matrix(which: Which, d: usize, json: bool) -> CmdResult {
    let (raw, name, tilde): (IntegerMatrix<BigInt>, &str, &str) = match which {
        Which::N => (build_n_matrix(d).map_err(err)?, "N", "\u{d1}"),
        Which::M => (build_m_matrix(d).map_err(err)?, "M", "M\u{303}"),
    };
    let tri = triangularize_by_row_subtraction(&raw);
    Ok(if json {
        to_json(&json!({"which": name, "d": d, "raw": raw, "triangular": tri}))
    } else {
        format!("{tilde}_{d}\n{raw}\n{name}_{d}\n{tri}")
    })
}

fn basis_lines(b: &GeneratorSet<BigInt>) -> String {
    b.iter().map(|g| format!("{g}\n")).collect()
}

fn hilbert(d: usize, radius: Option<u32>, json: bool) -> CmdResult {
    let formula = euler_monoid_hilbert_basis::<BigInt>(d).map_err(err)?;
    let brute = radius
        .map(|r| hilbert_basis_bruteforce::<BigInt>(d, r))
        .transpose()
        .map_err(err)?;
    let agree = brute.as_ref().map(|b| b == &formula);
    if json {
        let list = |b: &GeneratorSet<BigInt>| b.iter().cloned().collect::<Vec<_>>();
        return Ok(to_json(&json!({
            "d": d,
            "basis": list(&formula),
            "bruteforce": brute.as_ref().map(list),
            "agree": agree,
        })));
    }
    let mut out = format!(
        "Hilbert basis, d = {d}: {} elements\n{}",
        formula.len(),
        basis_lines(&formula)
    );
    if let (Some(r), Some(agree)) = (radius, agree) {
        out += &format!(
            "brute force within radius {r}: {}\n",
            if agree { "agrees" } else { "differs" }
        );
        if !agree {
            out += &basis_lines(brute.as_ref().expect("computed"));
        }
    }
    Ok(out)
}

fn load_polytope(path: &Path) -> Result<VertexFacetPolytope, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let j: PolytopeJson =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    VertexFacetPolytope::from_json(&j).map_err(err)
}

fn load_dataset(path: Option<&Path>) -> Result<FVectorDataset<BigInt>, String> {
    match path {
        None => Ok(FVectorDataset::builtin_4d()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            FVectorDataset::from_json(&text).map_err(err)
        }
    }
}

fn facet_arg(
    s: Option<&str>,
    default: Option<VertexSet>,
    which: &str,
) -> Result<VertexSet, String> {
    match s {
        Some(s) => {
            let idx: Vec<i64> = parse_integer_list(s).map_err(err)?;
            let idx = idx
                .into_iter()
                .map(|v| usize::try_from(v).map_err(|_| format!("bad vertex {v}")));
            Ok(VertexSet::from_indices(idx.collect::<Result<Vec<_>, _>>()?))
        }
        None => default.ok_or_else(|| format!("{which} has no simplex facet")),
    }
}

#[allow(clippy::too_many_arguments)]
fn glue(
    how: GlueKind,
    p_path: &Path,
    q_path: &Path,
    vertex: Option<usize>,
    facet1: Option<&str>,
    facet2: Option<&str>,
    out: Option<&Path>,
    json: bool,
) -> CmdResult {
    let p = load_polytope(p_path)?;
    let q = load_polytope(q_path)?;
    let f2 = facet_arg(facet2, simplex_facets(&q).first().copied(), "Q")?;
    let (glued, reduction) = match how {
        GlueKind::Adapter => {
            let v = vertex
                .or_else(|| adapter_witness(&p).map(|w| w.0))
                .ok_or("P is not an adapter")?;
            (adapter_glue(&p, v, &q, f2), Reduction::Simplex)
        }
        GlueKind::SimplexFacet => {
            let f1 = facet_arg(facet1, simplex_facets(&p).first().copied(), "P")?;
            (
                glue_in_simplex_facet(&p, f1, &q, f2, None),
                Reduction::SimplexFacetSphere,
            )
        }
        GlueKind::ConnectedSum => {
            let v = vertex
                .or_else(|| simple_vertices(&p).first().copied())
                .ok_or("P has no simple vertex")?;
            (connected_sum(&p, v, &q, f2), Reduction::VertexFacet)
        }
    };
    let glued = glued.map_err(err)?;
    let f: V = face_lattice(&glued).map_err(err)?.fvector().map_err(err)?;
    if let Some(path) = out {
        std::fs::write(path, to_json(&glued.to_json()) + "\n")
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(if json {
        to_json(&json!({"op": reduction.name(), "fvector": f, "polytope": glued.to_json()}))
    } else {
        f.to_string()
    })
}

/// A random M-sequence `(1, g_1, ..., g_{floor(d/2)})` with entries at most
/// `max_entry`.
pub fn random_g_vector(
    d: usize,
    max_entry: u64,
    rng: &mut impl Rng,
) -> Result<GVec<BigInt>, String> {
    let mut g = vec![BigInt::from(1), BigInt::from(rng.gen_range(0..=max_entry))];
    for i in 1..d / 2 {
        let cap = macaulay_pseudopower(&g[i], i as u32)
            .map_err(err)?
            .min(BigInt::from(max_entry));
        let cap = u64::try_from(cap).expect("capped by max_entry");
        g.push(BigInt::from(rng.gen_range(0..=cap)));
    }
    GVec::new(d, g).map_err(err)
}

fn g_check(d: usize, samples: usize, max_entry: u64, seed: u64, json: bool) -> CmdResult {
    if d < 2 {
        return Err("g-check needs d >= 2".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = ReductionBase::new(Reduction::Simplex, d).map_err(err)?;
    // Sample sequentially so the seed fixes the pairs, then check in parallel.
    let pairs = (0..samples)
        .map(|_| {
            Ok((
                random_g_vector(d, max_entry, &mut rng)?,
                random_g_vector(d, max_entry, &mut rng)?,
            ))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let failures: Vec<V> = pairs
        .par_iter()
        .filter_map(|(g1, g2)| {
            let sum = reduced_add(&g_to_f(g1), &g_to_f(g2), &base)
                .expect("same dimension")
                .vector;
            let expected: Vec<BigInt> = g1
                .entries()
                .iter()
                .zip(g2.entries())
                .enumerate()
                .map(|(i, (a, b))| if i == 0 { a.clone() } else { a + b })
                .collect();
            let ok = matches!(f_to_g(&sum), Ok(GSolution::Integral(ref g))
                if g.entries() == expected.as_slice() && is_m_sequence(g.entries()));
            (!ok).then_some(sum)
        })
        .collect();
    if json {
        return Ok(to_json(
            &json!({"d": d, "samples": samples, "seed": seed, "failures": failures}),
        ));
    }
    let mut out = format!(
        "d = {d}: {samples} pairs sampled, {} failures\n",
        failures.len()
    );
    for f in &failures {
        out += &format!("{f}\n");
    }
    Ok(out)
}
