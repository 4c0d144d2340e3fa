//! The `ktri` command line: argument parsing, dispatch and text rendering.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ktri_core::bijection::{color_diagram, psi, psi_inverse};
use ktri_core::dyck::{dominates, enumerate_tuples, determinant_count, DyckPath, PairEncoding, Step};
use ktri_core::format::{diagonal_list, parse_pair, parse_triangulation, write_pair, write_triangulation};
use ktri_core::gentree2::{label2, pair_children, pair_label, pair_parent};
use ktri_core::gentree_k::{children_k, enumerate_tree, parent_k};
use ktri_core::polygon::enumerate_brute;
use ktri_core::verify::run_suite;
use ktri_core::{Error, Guard, KTriangulation, PolygonContext};

#[derive(Debug, Parser)]
#[command(name = "ktri", version, about = "Exact combinatorics of k-triangulations of convex polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every k-triangulation of the n-gon, or every k-tuple of paths.
    Enumerate {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = EnumerateMethod::Tree)]
        method: EnumerateMethod,
        /// List k-tuples of non-crossing Dyck paths of semilength n-2k instead.
        #[arg(long)]
        tuples: bool,
    },
    /// Count the k-triangulations of the n-gon.
    Count {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = CountMethod::Det)]
        method: CountMethod,
    },
    /// Map a 2-triangulation to its pair of Dyck paths.
    Map {
        #[command(flatten)]
        input: Input,
        /// Print one line per coloring iteration to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Map a pair of Dyck paths back to its 2-triangulation.
    Unmap {
        #[command(flatten)]
        input: Input,
    },
    /// Parent of a triangulation or of a path pair in its generating tree.
    Parent {
        #[command(flatten)]
        input: Input,
    },
    /// Children of a triangulation or of a path pair, one per line.
    Children {
        #[command(flatten)]
        input: Input,
    },
    /// Dump the generating tree down to the n-gon, depth first.
    Tree {
        #[command(flatten)]
        size: Size,
        /// Dump the tree of path pairs (k=2) instead.
        #[arg(long)]
        pairs: bool,
    },
    /// Run the invariant suite for every polygon up to n-max sides.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Draw a staircase diagram or a pair of paths.
    Render {
        #[command(flatten)]
        input: Input,
        /// Draw P from (0,1) and Q from (1,0).
        #[arg(long)]
        shifted: bool,
    },
}

#[derive(Debug, Args)]
pub struct Size {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Input file, or `-` for stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline object, with `;` separating lines.
    #[arg(long)]
    pub object: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateMethod {
    Tree,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Det,
    Tree,
    Brute,
}

/// A failure reported with exit status 1.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

enum Object {
    Triangulation(KTriangulation),
    Pair(DyckPath, DyckPath),
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, Failure> {
    if let Some(text) = &input.object {
        return Ok(text.replace(';', "\n"));
    }
    match input.input.as_deref() {
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => Err(Failure("no input given".into())),
    }
}

fn parse_object(text: &str) -> Result<Object, Failure> {
    if text.starts_with("k=") {
        let set = parse_triangulation(text)?;
        Ok(Object::Triangulation(KTriangulation::new(set)?))
    } else {
        let (p, q) = parse_pair(text)?;
        if !dominates(&p, &q)? {
            return Err(Error::NotDominating.into());
        }
        Ok(Object::Pair(p, q))
    }
}

fn triangulation_of(text: &str) -> Result<KTriangulation, Failure> {
    match parse_object(text)? {
        Object::Triangulation(t) => Ok(t),
        Object::Pair(..) => Err(Failure("expected a triangulation".into())),
    }
}

fn require_k2(t: &KTriangulation) -> Result<(), Failure> {
    if t.ctx().k() == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedK {
            expected: 2,
            got: t.ctx().k(),
        }
        .into())
    }
}

fn one_line(p: &DyckPath, q: &DyckPath) -> String {
    format!("{p} {q}")
}

/// The staircase with `X` for crosses and `.` for empty cells. Rows without
/// any cell are left out.
pub fn render_diagram(t: &KTriangulation) -> String {
    let ctx = t.ctx();
    let cw = ctx.n().to_string().len();
    let rw = ctx.rows().end().to_string().len();
    let mut out = " ".repeat(rw);
    for b in ctx.columns() {
        write!(out, " {b:>cw$}").unwrap();
    }
    out.push('\n');
    for a in ctx.rows() {
        if !ctx.columns().any(|b| ctx.is_cell(a, b)) {
            continue;
        }
        let mut line = format!("{a:>rw$}");
        for b in ctx.columns() {
            let c = if !ctx.is_cell(a, b) {
                ' '
            } else if t.contains(a, b) {
                'X'
            } else {
                '.'
            };
            write!(line, " {c:>cw$}").unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn lattice_points(p: &DyckPath, start: (usize, usize)) -> Vec<(usize, usize)> {
    let mut pts = vec![start];
    let (mut x, mut y) = start;
    for s in p.steps() {
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
        }
        pts.push((x, y));
    }
    pts
}

/// Lattice points of both paths: `P`, `Q`, `*` where they meet, `.` elsewhere.
/// The top line is the highest ordinate.
pub fn render_paths(p: &DyckPath, q: &DyckPath, shifted: bool) -> String {
    let m = p.semilength();
    let (ps, qs, side) = if shifted {
        ((0, 1), (1, 0), m + 2)
    } else {
        ((0, 0), (0, 0), m + 1)
    };
    let mut grid = vec![vec!['.'; side]; side];
    for (x, y) in lattice_points(p, ps) {
        grid[y][x] = 'P';
    }
    for (x, y) in lattice_points(q, qs) {
        grid[y][x] = if grid[y][x] == 'P' { '*' } else { 'Q' };
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn ctx_of(size: &Size) -> Result<PolygonContext, Failure> {
    Ok(PolygonContext::new(size.n, size.k)?)
}

fn enumerate(size: &Size, method: EnumerateMethod, tuples: bool, guard: &Guard) -> Outcome {
    let ctx = ctx_of(size)?;
    let mut out = String::new();
    if tuples {
        for t in enumerate_tuples(size.n - 2 * size.k, size.k, guard)? {
            let line: Vec<String> = t.paths().iter().map(|p| p.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        return Ok(out);
    }
    let all = match method {
        EnumerateMethod::Tree => enumerate_tree(size.n, size.k, guard)?,
        EnumerateMethod::Brute => enumerate_brute(ctx, guard)?,
    };
    writeln!(out, "{ctx}").unwrap();
    for t in &all {
        writeln!(out, "{}", diagonal_list(t)).unwrap();
    }
    Ok(out)
}

fn count(size: &Size, method: CountMethod, guard: &Guard) -> Outcome {
    let ctx = ctx_of(size)?;
    let value = match method {
        CountMethod::Det => determinant_count(size.n, size.k)?.to_string(),
        CountMethod::Tree => enumerate_tree(size.n, size.k, guard)?.len().to_string(),
        CountMethod::Brute => enumerate_brute(ctx, guard)?.len().to_string(),
    };
    Ok(format!("{value}\n"))
}

fn map(text: &str, trace: bool, err: &mut dyn Write) -> Outcome {
    let t = triangulation_of(text)?;
    require_k2(&t)?;
    if trace {
        for step in color_diagram(&t)?.steps() {
            writeln!(err, "{step}")?;
        }
    }
    let (p, q) = psi(&t)?;
    Ok(write_pair(&p, &q))
}

fn unmap(text: &str) -> Outcome {
    match parse_object(text)? {
        Object::Pair(p, q) => Ok(write_triangulation(psi_inverse(&p, &q)?.as_set())),
        Object::Triangulation(_) => Err(Failure("expected a pair of paths".into())),
    }
}

fn parent(text: &str) -> Outcome {
    match parse_object(text)? {
        Object::Triangulation(t) => Ok(write_triangulation(parent_k(&t)?.as_set())),
        Object::Pair(p, q) => {
            let (pp, pq) = pair_parent(&PairEncoding::from_paths(&p, &q)?)?.to_paths();
            Ok(write_pair(&pp, &pq))
        }
    }
}

fn children(text: &str) -> Outcome {
    let mut out = String::new();
    match parse_object(text)? {
        Object::Triangulation(t) => {
            let k2 = t.ctx().k() == 2;
            for (choice, c) in children_k(&t)? {
                if k2 {
                    writeln!(out, "{choice}\t{}\t{}", label2(&c)?, diagonal_list(&c)).unwrap();
                } else {
                    writeln!(out, "{choice}\t{}", diagonal_list(&c)).unwrap();
                }
            }
        }
        Object::Pair(p, q) => {
            for (choice, c) in pair_children(&PairEncoding::from_paths(&p, &q)?)? {
                let (cp, cq) = c.to_paths();
                writeln!(out, "{choice}\t{}\t{}", pair_label(&c), one_line(&cp, &cq)).unwrap();
            }
        }
    }
    Ok(out)
}

fn tree(size: &Size, pairs: bool, guard: &Guard) -> Outcome {
    let ctx = ctx_of(size)?;
    let total = determinant_count(size.n, size.k)?;
    if total > guard.max_tree_count.into() {
        return Err(Error::GuardExceeded {
            what: "tree dump count",
            size: u64::try_from(&total).unwrap_or(u64::MAX),
            limit: guard.max_tree_count,
        }
        .into());
    }
    let depth = size.n - (2 * size.k + 1);
    let mut out = String::new();
    if pairs {
        if ctx.k() != 2 {
            return Err(Error::UnsupportedK { expected: 2, got: ctx.k() }.into());
        }
        let mut stack = vec![(0, PairEncoding::root())];
        while let Some((level, e)) = stack.pop() {
            let (p, q) = e.to_paths();
            writeln!(out, "{level}\t{}\t{}", pair_label(&e), one_line(&p, &q)).unwrap();
            if level < depth {
                let kids = pair_children(&e)?;
                stack.extend(kids.into_iter().rev().map(|(_, c)| (level + 1, c)));
            }
        }
        return Ok(out);
    }
    let mut stack = vec![(0, KTriangulation::root(ctx.k())?)];
    while let Some((level, t)) = stack.pop() {
        let label = if ctx.k() == 2 { label2(&t)?.to_string() } else { "-".to_string() };
        writeln!(out, "{level}\t{label}\t{}", diagonal_list(&t)).unwrap();
        if level < depth {
            let kids = children_k(&t)?;
            stack.extend(kids.into_iter().rev().map(|(_, c)| (level + 1, c)));
        }
    }
    Ok(out)
}

fn verify(k: usize, n_max: usize, guard: &Guard) -> Result<(String, bool), Failure> {
    PolygonContext::new(n_max, k)?;
    let outcomes = run_suite(k, n_max, guard)?;
    let mut out = String::new();
    for o in &outcomes {
        writeln!(out, "{o}").unwrap();
    }
    Ok((out, outcomes.iter().all(|o| o.passed())))
}

fn render(text: &str, shifted: bool) -> Outcome {
    match parse_object(text)? {
        Object::Triangulation(t) => Ok(render_diagram(&t)),
        Object::Pair(p, q) => Ok(render_paths(&p, &q, shifted)),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let guard = Guard::from_env();
    let result: Result<(String, bool), Failure> = (|| {
        let ok = |s: String| (s, true);
        Ok(match &cli.command {
            Command::Enumerate { size, method, tuples } => ok(enumerate(size, *method, *tuples, &guard)?),
            Command::Count { size, method } => ok(count(size, *method, &guard)?),
            Command::Map { input, trace } => ok(map(&read_input(input, stdin)?, *trace, err)?),
            Command::Unmap { input } => ok(unmap(&read_input(input, stdin)?)?),
            Command::Parent { input } => ok(parent(&read_input(input, stdin)?)?),
            Command::Children { input } => ok(children(&read_input(input, stdin)?)?),
            Command::Tree { size, pairs } => ok(tree(size, *pairs, &guard)?),
            Command::Verify { k, n_max } => verify(*k, *n_max, &guard)?,
            Command::Render { input, shifted } => ok(render(&read_input(input, stdin)?, *shifted)?),
        })
    })();
    match result {
        Ok((text, passed)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return 1;
            }
            if passed {
                0
            } else {
                1
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(text: &str) -> KTriangulation {
        KTriangulation::new(parse_triangulation(text).unwrap()).unwrap()
    }

    #[test]
    fn hexagon_diagram() {
        let got = render_diagram(&tri("k=2 n=6\n1-4,2-5\n"));
        assert_eq!(got, "  4 5 6\n1 X\n2   X\n3     .\n");
    }

    #[test]
    fn pentagon_diagram_is_header_only() {
        let got = render_diagram(&KTriangulation::root(2).unwrap());
        assert_eq!(got, "  4 5\n");
    }

    #[test]
    fn coincident_paths() {
        let ne: DyckPath = "NE".parse().unwrap();
        assert_eq!(render_paths(&ne, &ne, false), "* *\n* .\n");
    }

    #[test]
    fn shifted_paths_are_disjoint() {
        let p: DyckPath = "NNEE".parse().unwrap();
        let q: DyckPath = "NENE".parse().unwrap();
        let got = render_paths(&p, &q, true);
        assert!(!got.contains('*'));
        assert_eq!(got.matches('P').count(), 5);
        assert_eq!(got.matches('Q').count(), 5);
    }

    #[test]
    fn inline_objects_use_semicolons() {
        let input = Input {
            input: None,
            object: Some("k=2 n=6;1-4,3-6".into()),
        };
        assert_eq!(read_input(&input, &mut io::empty()).unwrap(), "k=2 n=6\n1-4,3-6");
    }
}
