use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use chibound::chi::{
    chi_bounded_coloring_with, color_bound, one_join_compose, ChiBoundFn, ChiColoringOptions,
    DefaultColorer,
};
use chibound::cut::{cut_diversity, cut_matrix, cut_rank};
use chibound::gen;
use chibound::oracles::{
    clique_number_with, has_vertex_minor_with, is_proper, no_max_clique_monochromatic, Coloring,
    Limits,
};
use chibound::{
    decomposition_rank, exact_rank_width_with, named_graph, validate_rank_decomposition,
    Decomposition, Graph, NamedGraph, RankWidthConfig, VertexSet,
};

use crate::failure::{Failure, Outcome};

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome<()> {
    fs::write(path, text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: chibound::Result<T>) -> Outcome<T> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

pub fn load_graph(path: &Path) -> Outcome<Graph> {
    with_path(path, Graph::parse(&read(path)?))
}

pub fn load_decomposition(path: &Path, g: &Graph) -> Outcome<Decomposition> {
    let d = with_path(path, Decomposition::parse(&read(path)?))?;
    if d.n_vertices() != g.n() {
        return Err(Failure::parse(format!(
            "{}: maps {} vertices, graph has {}",
            path.display(),
            d.n_vertices(),
            g.n()
        )));
    }
    Ok(d)
}

/// Parses `0,1,5` (or an empty string) into a vertex set of `g`.
fn parse_side(spec: &str, n: usize) -> Outcome<VertexSet> {
    let ids = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::parse(format!("bad vertex `{s}` in --side")))
        })
        .collect::<Outcome<Vec<_>>>()?;
    Ok(VertexSet::try_from_iter(n, ids)?)
}

pub fn cutrank(graph: &Path, side: &str) -> Outcome<String> {
    let g = load_graph(graph)?;
    let w = parse_side(side, g.n())?;
    let m = cut_matrix(&g, &w)?;
    Ok(format!(
        "rank={} diversity={}\n",
        cut_rank(&m),
        cut_diversity(&m)
    ))
}

pub fn rankwidth(
    graph: &Path,
    out: Option<&Path>,
    limits: &Limits,
    sequential: bool,
) -> Outcome<String> {
    let g = load_graph(graph)?;
    let cfg = RankWidthConfig {
        limit: limits.rank_width,
        parallel: !sequential,
    };
    let (width, witness) = exact_rank_width_with(&g, &cfg)?;
    // re-check the witness from scratch
    let checked = validate_rank_decomposition(&g, witness.decomposition())?;
    if checked.width() != width {
        return Err(Failure::contract(format!(
            "witness has width {}, search reported {width}",
            checked.width()
        )));
    }
    if let Some(path) = out {
        write(path, &witness.decomposition().to_text())?;
    }
    Ok(format!("width={width}\n"))
}

pub struct ColorArgs<'a> {
    pub graph: &'a Path,
    pub decomposition: &'a Path,
    pub f: &'a str,
    pub r: usize,
    pub out: Option<&'a Path>,
    pub sequential: bool,
}

pub fn color(args: &ColorArgs<'_>, limits: &Limits) -> Outcome<String> {
    let start = Instant::now();
    let g = load_graph(args.graph)?;
    let d = load_decomposition(args.decomposition, &g)?;
    let bound = ChiBoundFn::new(ChiBoundFn::parse_function(args.f)?, args.r)?;
    let rank = decomposition_rank(&g, &d)?;
    let opts = ChiColoringOptions {
        parallel: !args.sequential,
        limits: *limits,
        ..Default::default()
    };
    let coloring =
        chi_bounded_coloring_with(&g, &d, &DefaultColorer { limits: *limits }, &bound, &opts)?;

    // independent re-verification before reporting success
    let omega = clique_number_with(&g, limits)?;
    let limit = color_bound(&bound, omega.max(1))?;
    let proper = is_proper(&g, &coloring)?;
    let within = coloring.palette_size() <= limit;
    let mut report = String::new();
    writeln!(
        report,
        "n={} m={} omega={omega} rank={rank} r={}",
        g.n(),
        g.m(),
        args.r
    )
    .unwrap();
    writeln!(report, "palette={} bound={limit}", coloring.palette_size()).unwrap();
    writeln!(report, "proper={}", verdict(proper)).unwrap();
    writeln!(report, "within_bound={}", verdict(within)).unwrap();
    writeln!(report, "time_ms={}", start.elapsed().as_millis()).unwrap();
    if !proper || !within {
        return Err(Failure::contract(format!(
            "re-verification failed\n{report}"
        )));
    }
    if let Some(path) = args.out {
        write(path, &coloring.to_text())?;
    }
    Ok(report)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Returns the report and whether every check passed.
pub fn verify(
    graph: &Path,
    coloring: &Path,
    decomposition: Option<&Path>,
    max_width: Option<usize>,
) -> Outcome<(String, bool)> {
    let g = load_graph(graph)?;
    let c = with_path(coloring, Coloring::parse(&read(coloring)?, g.n()))?;
    let mut checks: Vec<(&str, bool, String)> = vec![
        ("proper", is_proper(&g, &c)?, String::new()),
        (
            "max-clique-not-monochromatic",
            no_max_clique_monochromatic(&g, &c)?,
            String::new(),
        ),
    ];
    if let Some(path) = decomposition {
        let d = load_decomposition(path, &g)?;
        let degrees: Vec<usize> = (0..d.nodes()).map(|x| d.degree(x)).collect();
        let cubic = degrees.iter().all(|&k| k == 1 || k == 3) || d.nodes() == 1;
        let mut hits = vec![0usize; d.nodes()];
        for &t in d.tau() {
            hits[t] += 1;
        }
        let on_leaves = d.tau().iter().all(|&t| degrees[t] <= 1);
        let injective = on_leaves && hits.iter().all(|&h| h <= 1);
        let covered = (0..d.nodes()).all(|x| degrees[x] > 1 || hits[x] == 1);
        checks.push(("cubic", cubic, String::new()));
        checks.push(("injective-leaf", injective, String::new()));
        checks.push(("leaves-covered", covered, String::new()));
        let valid = validate_rank_decomposition(&g, &d).is_ok();
        let width = decomposition_rank(&g, &d)?;
        let ok = valid && max_width.is_none_or(|w| width <= w);
        let note = match max_width {
            Some(w) => format!(" ({width} <= {w})"),
            None => format!(" ({width})"),
        };
        checks.push(("width", ok, note));
    }
    let mut report = String::new();
    for (name, ok, note) in &checks {
        writeln!(report, "{name}: {}{note}", verdict(*ok)).unwrap();
    }
    Ok((report, checks.iter().all(|c| c.1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenMode {
    Er,
    Jointree,
    Rw,
}

pub struct GenArgs<'a> {
    pub mode: GenMode,
    pub n: usize,
    pub seed: u64,
    pub p: f64,
    pub max_size: usize,
    pub out_dir: &'a Path,
}

const MAX_ER_VERTICES: usize = 4096;
const MAX_PIECES: usize = 64;

pub fn generate(args: &GenArgs<'_>, limits: &Limits) -> Outcome<String> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::parse(format!(
            "--p {} is not a probability",
            args.p
        )));
    }
    let mut rng = gen::rng(args.seed);
    let stem = |ext: &str| -> PathBuf {
        let mode = match args.mode {
            GenMode::Er => "er",
            GenMode::Jointree => "jointree",
            GenMode::Rw => "rw",
        };
        args.out_dir
            .join(format!("{mode}-n{}-s{}.{ext}", args.n, args.seed))
    };
    fs::create_dir_all(args.out_dir)?;
    let mut report = String::new();
    match args.mode {
        GenMode::Er => {
            check_range("--n", args.n, 1, MAX_ER_VERTICES)?;
            let g = gen::gnp(&mut rng, args.n, args.p);
            let path = stem("graph");
            write(&path, &g.to_text())?;
            writeln!(report, "graph {}", path.display()).unwrap();
        }
        GenMode::Rw => {
            check_range("--n", args.n, 1, limits.rank_width.min(64))?;
            let g = gen::gnp(&mut rng, args.n, args.p);
            let (width, witness) = exact_rank_width_with(
                &g,
                &RankWidthConfig {
                    limit: limits.rank_width,
                    ..Default::default()
                },
            )?;
            let (gp, dp) = (stem("graph"), stem("dec"));
            write(&gp, &g.to_text())?;
            write(&dp, &witness.decomposition().to_text())?;
            writeln!(report, "graph {}", gp.display()).unwrap();
            writeln!(report, "decomposition {}", dp.display()).unwrap();
            writeln!(report, "width={width}").unwrap();
        }
        GenMode::Jointree => {
            check_range("--n", args.n, 1, MAX_PIECES)?;
            check_range("--max-size", args.max_size, 2, 64)?;
            let jt = gen::jointree_with_pieces(&mut rng, args.n, args.max_size, args.p);
            let (g, d) = one_join_compose(&jt)?;
            let rank = decomposition_rank(&g, &d)?;
            let (jp, gp, dp) = (stem("jt"), stem("graph"), stem("dec"));
            write(&jp, &jt.to_text())?;
            write(&gp, &g.to_text())?;
            write(&dp, &d.to_text())?;
            writeln!(report, "jointree {}", jp.display()).unwrap();
            writeln!(report, "graph {}", gp.display()).unwrap();
            writeln!(report, "decomposition {}", dp.display()).unwrap();
            writeln!(report, "rank={rank}").unwrap();
        }
    }
    Ok(report)
}

fn check_range(flag: &str, value: usize, lo: usize, hi: usize) -> Outcome<()> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(Failure::parse(format!(
            "{flag} {value} outside {lo}..={hi}"
        )))
    }
}

pub fn vminor(graph: &Path, target: &str, limits: &Limits) -> Outcome<String> {
    let g = load_graph(graph)?;
    let h = match target.to_ascii_lowercase().as_str() {
        "w5" => named_graph(NamedGraph::W5),
        "w7" => named_graph(NamedGraph::W7),
        "cube" => named_graph(NamedGraph::Cube),
        "cube-" | "cube-minus" => named_graph(NamedGraph::CubeMinus),
        _ => load_graph(Path::new(target))?,
    };
    let found = has_vertex_minor_with(&g, &h, limits)?;
    Ok(format!("{}\n", if found { "contains" } else { "free" }))
}
