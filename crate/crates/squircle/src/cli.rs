//! `squircle` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use squircle_core::{
    frantz_polyline, make_field2d, make_field3d, Domain2D, Domain3D, Family2D, Family3D,
    ShapeError, ShapeSpec2D, ShapeSpec3D,
};

use crate::export::{write_csv, write_obj, write_stl, write_svg};
use crate::parallel::Engine;
use crate::verify::{run_suite, Suite};
use crate::Error;

pub const CURVE_GRID: usize = 512;
pub const SURFACE_GRID: usize = 96;

#[derive(Debug, Parser)]
#[command(name = "squircle", version, about = "Squircle curves and surfaces: contour, mesh, sweep and verify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Contour a 2D family to SVG or CSV.
    Curve(CurveArgs),
    /// Polygonize a 3D family to OBJ or STL.
    Surface(SurfaceArgs),
    /// Render one file per value of a swept parameter.
    Sweep(SweepArgs),
    /// Run numerical checks and print one line per check.
    Verify(VerifyArgs),
    /// Describe a family: equation, parameters, behaviour.
    Info(InfoArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    /// Family name, e.g. fg, periodic, lame3d, toroid (see `info`).
    #[arg(long)]
    pub family: String,
    /// Squareness s.
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub squareness: Option<f64>,
    /// Scale r (tube radius for toroids).
    #[arg(long, alias = "r", value_parser = parse_real, allow_hyphen_values = true)]
    pub radius: Option<f64>,
    /// Toroid major radius R.
    #[arg(long = "R", value_parser = parse_real, allow_hyphen_values = true)]
    pub major_radius: Option<f64>,
    /// Lamé exponent p ("inf" for the square).
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub exponent: Option<f64>,
    /// Overshoot h (oblique families).
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub overshoot: Option<f64>,
    /// Cone base semi-axis a.
    #[arg(long = "a", value_parser = parse_real, allow_hyphen_values = true)]
    pub semi_a: Option<f64>,
    /// Cone base semi-axis b.
    #[arg(long = "b", value_parser = parse_real, allow_hyphen_values = true)]
    pub semi_b: Option<f64>,
    /// Cone height c.
    #[arg(long = "c", value_parser = parse_real, allow_hyphen_values = true)]
    pub height: Option<f64>,
    /// Cuboctahedron scale k.
    #[arg(long = "k", value_parser = parse_real, allow_hyphen_values = true)]
    pub scale: Option<f64>,
    /// Cuboctahedron cross-term constant.
    #[arg(long = "cc", value_parser = parse_real, allow_hyphen_values = true)]
    pub cross_term: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Cells per axis (default 512 for curves, 96 for surfaces).
    #[arg(long)]
    pub grid: Option<usize>,
    /// Enlarge the default window by this many periods or cells.
    #[arg(long, default_value_t = 1)]
    pub tiles: u32,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub ymin: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub ymax: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub zmin: Option<f64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub zmax: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    Svg,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceFormat {
    Obj,
    Stl,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = CurveFormat::Svg)]
    pub format: CurveFormat,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = SurfaceFormat::Obj)]
    pub format: SurfaceFormat,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    /// Squareness.
    S,
    /// Lamé exponent.
    P,
    /// Overshoot.
    H,
    /// Scale.
    R,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    /// svg|csv for curves, obj|stl for surfaces.
    #[arg(long)]
    pub format: Option<String>,
    /// Output stem; files are named STEM_000.EXT, STEM_001.EXT, ...
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    #[arg(long)]
    pub family: String,
}

/// Real number, `inf`, or a multiple of π: `pi`, `-pi`, `pi/2`, `2pi`, `3*pi/4`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let value = if let Some((coef, rest)) = t.split_once("pi") {
        let coef = coef.trim_end_matches('*');
        let c = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| format!("invalid number `{s}`"))?,
        };
        let d = match rest {
            "" => 1.0,
            r => r
                .strip_prefix('/')
                .and_then(|d| d.parse::<f64>().ok())
                .ok_or_else(|| format!("invalid number `{s}`"))?,
        };
        c * std::f64::consts::PI / d
    } else {
        t.parse::<f64>().map_err(|_| format!("invalid number `{s}`"))?
    };
    if value.is_nan() {
        return Err(format!("invalid number `{s}`"));
    }
    Ok(value)
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Curve(a) => {
            let spec = curve_spec(&a.shape)?;
            let ext = match a.format {
                CurveFormat::Svg => "svg",
                CurveFormat::Csv => "csv",
            };
            render_curve(&spec, &a.grid, ext, &a.out, &Engine::from_env(), out)?;
            Ok(0)
        }
        Command::Surface(a) => {
            let spec = surface_spec(&a.shape)?;
            if let Some(w) = spec.warning() {
                let _ = writeln!(err, "warning: {w}");
            }
            let ext = match a.format {
                SurfaceFormat::Obj => "obj",
                SurfaceFormat::Stl => "stl",
            };
            render_surface(&spec, &a.grid, ext, &a.out, &Engine::from_env(), out)?;
            Ok(0)
        }
        Command::Sweep(a) => sweep(&a, out, err),
        Command::Verify(a) => {
            let checks = run_suite(a.suite, &Engine::from_env());
            let mut ok = true;
            for c in &checks {
                ok &= c.passed();
                let _ = writeln!(out, "{c}");
            }
            Ok(if ok { 0 } else { 2 })
        }
        Command::Info(a) => {
            let text = info(&a.family).ok_or_else(|| unknown_family(&a.family))?;
            let _ = out.write_all(text.as_bytes());
            Ok(0)
        }
    }
}

fn unknown_family(name: &str) -> Error {
    let names: Vec<&str> = Family2D::ALL
        .iter()
        .map(|f| f.name())
        .chain(Family3D::ALL.iter().map(|f| f.name()))
        .collect();
    Error::Usage(format!("--family: unknown family `{name}` (one of {})", names.join(", ")))
}

/// Prefixes a parameter error with the flag that set the parameter.
fn flag_error(e: ShapeError) -> Error {
    let ShapeError::OutOfRange { name, .. } = &e else {
        return e.into();
    };
    let flag = match *name {
        "major_radius" => "R",
        "height" => "c",
        "semi_a" => "a",
        "semi_b" => "b",
        "scale" => "k",
        "cross_term" => "cc",
        "samples" => "grid",
        other => other,
    };
    Error::Usage(format!("--{flag}: {e}"))
}

pub fn curve_spec(a: &ShapeArgs) -> Result<ShapeSpec2D, Error> {
    let family = match Family2D::from_name(&a.family) {
        Some(f) => f,
        None if Family3D::from_name(&a.family).is_some() => {
            return Err(Error::Usage(format!(
                "--family: `{}` is a surface family; use `squircle surface`",
                a.family
            )))
        }
        None => return Err(unknown_family(&a.family)),
    };
    let mut spec = ShapeSpec2D::new(family);
    if let Some(v) = a.squareness {
        spec.squareness = v;
    }
    if let Some(v) = a.radius {
        spec.radius = v;
    }
    if let Some(v) = a.exponent {
        spec.exponent = v;
    }
    if let Some(v) = a.overshoot {
        spec.overshoot = v;
    }
    spec.validate().map_err(flag_error)?;
    Ok(spec)
}

pub fn surface_spec(a: &ShapeArgs) -> Result<ShapeSpec3D, Error> {
    let family = match Family3D::from_name(&a.family) {
        Some(f) => f,
        None if Family2D::from_name(&a.family).is_some() => {
            return Err(Error::Usage(format!(
                "--family: `{}` is a curve family; use `squircle curve`",
                a.family
            )))
        }
        None => return Err(unknown_family(&a.family)),
    };
    let mut spec = ShapeSpec3D::new(family);
    let set = |slot: &mut f64, v: Option<f64>| {
        if let Some(v) = v {
            *slot = v;
        }
    };
    set(&mut spec.squareness, a.squareness);
    set(&mut spec.radius, a.radius);
    set(&mut spec.exponent, a.exponent);
    set(&mut spec.overshoot, a.overshoot);
    set(&mut spec.major_radius, a.major_radius);
    set(&mut spec.semi_a, a.semi_a);
    set(&mut spec.semi_b, a.semi_b);
    set(&mut spec.height, a.height);
    set(&mut spec.scale, a.scale);
    set(&mut spec.cross_term, a.cross_term);
    spec.validate().map_err(flag_error)?;
    Ok(spec)
}

fn grid_cells(g: &GridArgs, default: usize) -> Result<usize, Error> {
    let cells = g.grid.unwrap_or(default);
    if cells < 8 {
        return Err(Error::Usage(format!("--grid: needs at least 8 cells, got {cells}")));
    }
    if g.tiles < 1 {
        return Err(Error::Usage("--tiles: must be at least 1".into()));
    }
    Ok(cells)
}

pub fn curve_domain(spec: &ShapeSpec2D, g: &GridArgs) -> Result<Domain2D, Error> {
    let cells = grid_cells(g, CURVE_GRID)?;
    let mut d = spec.default_domain(g.tiles, cells);
    d.xmin = g.xmin.unwrap_or(d.xmin);
    d.xmax = g.xmax.unwrap_or(d.xmax);
    d.ymin = g.ymin.unwrap_or(d.ymin);
    d.ymax = g.ymax.unwrap_or(d.ymax);
    d.validate()?;
    Ok(d)
}

pub fn surface_domain(spec: &ShapeSpec3D, g: &GridArgs) -> Result<Domain3D, Error> {
    let cells = grid_cells(g, SURFACE_GRID)?;
    let mut d = spec.default_domain(g.tiles, cells);
    for (a, (lo, hi)) in [(g.xmin, g.xmax), (g.ymin, g.ymax), (g.zmin, g.zmax)].into_iter().enumerate() {
        d.min[a] = lo.unwrap_or(d.min[a]);
        d.max[a] = hi.unwrap_or(d.max[a]);
    }
    d.validate()?;
    Ok(d)
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path).map(BufWriter::new).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn io_at(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn empty_notice(out: &mut dyn Write, shape: &dyn std::fmt::Display) {
    let _ = writeln!(out, "notice: empty level set for {shape} in the sampled domain");
}

pub fn render_curve(
    spec: &ShapeSpec2D,
    g: &GridArgs,
    ext: &str,
    path: &Path,
    engine: &Engine,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let domain = curve_domain(spec, g)?;
    let polylines = if spec.family == Family2D::Frantz {
        let n = grid_cells(g, CURVE_GRID)?;
        vec![frantz_polyline(spec.squareness, spec.radius, n).map_err(flag_error)?]
    } else {
        let field = make_field2d(spec)?;
        engine.contour(&field, &domain)?
    };
    if polylines.is_empty() {
        empty_notice(out, spec);
    }
    let mut w = create(path)?;
    match ext {
        "svg" => write_svg(&polylines, &domain, &mut w),
        "csv" => write_csv(&polylines, &mut w),
        other => return Err(Error::Usage(format!("--format: `{other}` is not a curve format (svg, csv)"))),
    }
    .and_then(|_| w.flush())
    .map_err(io_at(path))?;
    let _ = writeln!(out, "wrote {} ({} polylines)", path.display(), polylines.len());
    Ok(())
}

pub fn render_surface(
    spec: &ShapeSpec3D,
    g: &GridArgs,
    ext: &str,
    path: &Path,
    engine: &Engine,
    out: &mut dyn Write,
) -> Result<(), Error> {
    // More than one tile only makes sense with the periodic extension.
    let spec = spec.with_tiling(spec.tiled || g.tiles > 1);
    let domain = surface_domain(&spec, g)?;
    let field = make_field3d(&spec)?;
    let mesh = engine.polygonize(&field, &domain)?;
    if mesh.is_empty() {
        empty_notice(out, &spec);
    }
    let label = spec.to_string();
    let mut w = create(path)?;
    match ext {
        "obj" => write_obj(&mesh, &label, &mut w),
        "stl" => write_stl(&mesh, &label, &mut w),
        other => return Err(Error::Usage(format!("--format: `{other}` is not a surface format (obj, stl)"))),
    }
    .and_then(|_| w.flush())
    .map_err(io_at(path))?;
    let _ = writeln!(
        out,
        "wrote {} ({} vertices, {} triangles)",
        path.display(),
        mesh.vertices.len(),
        mesh.triangles.len()
    );
    Ok(())
}

fn sweep_values(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        1 => vec![from],
        n => (0..n)
            .map(|i| if i + 1 == n { to } else { from + (to - from) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

fn sweep_path(stem: &Path, index: usize, ext: &str) -> PathBuf {
    let base = stem.with_extension("");
    let name = base.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    base.with_file_name(format!("{name}_{index:03}.{ext}"))
}

fn sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    if a.steps == 0 {
        return Err(Error::Usage("--steps: must be at least 1".into()));
    }
    let values = sweep_values(a.from, a.to, a.steps);
    let engine = Engine::from_env();
    let is_curve = Family2D::from_name(&a.shape.family).is_some();
    let ext = a.format.clone().unwrap_or_else(|| if is_curve { "svg" } else { "obj" }.into());
    let valid = if is_curve { ["svg", "csv"] } else { ["obj", "stl"] };
    if !valid.contains(&ext.as_str()) {
        return Err(Error::Usage(format!(
            "--format: `{ext}` does not fit this family (one of {})",
            valid.join(", ")
        )));
    }
    let with_value = |v: f64| {
        let mut shape = a.shape.clone();
        let slot = match a.param {
            SweepParam::S => &mut shape.squareness,
            SweepParam::P => &mut shape.exponent,
            SweepParam::H => &mut shape.overshoot,
            SweepParam::R => &mut shape.radius,
        };
        *slot = Some(v);
        shape
    };
    // Validate every step before writing anything.
    if is_curve {
        let specs = values.iter().map(|&v| curve_spec(&with_value(v))).collect::<Result<Vec<_>, _>>()?;
        for (i, spec) in specs.iter().enumerate() {
            render_curve(spec, &a.grid, &ext, &sweep_path(&a.out, i, &ext), &engine, out)?;
        }
    } else {
        let specs = values.iter().map(|&v| surface_spec(&with_value(v))).collect::<Result<Vec<_>, _>>()?;
        for (i, spec) in specs.iter().enumerate() {
            if let Some(w) = spec.warning() {
                let _ = writeln!(err, "warning: {w}");
            }
            render_surface(spec, &a.grid, &ext, &sweep_path(&a.out, i, &ext), &engine, out)?;
        }
    }
    Ok(0)
}

/// Plain-text description of a family, `None` for unknown names.
pub fn info(name: &str) -> Option<String> {
    let (equation, params, about) = match name {
        "lame" => (
            "|x|^p + |y|^p = r^p   (evaluated as ||(x,y)||_p - r)",
            "p in [1, inf] (inf = square), r > 0",
            "Superellipse. p = 2 is the circle, p = 1 a tilted square with vertices at +-r, p -> inf the axis-aligned square of side 2r.",
        ),
        "fg" => (
            "x^2 + y^2 - (s^2/r^2) x^2 y^2 = r^2",
            "s in [0, 1], r > 0",
            "Quartic squircle. s = 0 is the circle of radius r, s = 1 the square of side 2r.",
        ),
        "periodic" => (
            "cos(s pi/2) = cos(s pi x / 2r) cos(s pi y / 2r)",
            "s in [0, 1] (s = 0 maps to the circle), r > 0",
            "Doubly periodic with period 4r/s. The central closed curve is a squircle; s = 1 gives the grid of lines x, y = (2n+1) r.",
        ),
        "oblique" => (
            "1 + cos(s pi) - floor(s) h = cos(s pi x / r) + cos(s pi y / r)",
            "s in [0, 1] (s = 0 maps to the circle), r > 0, overshoot h in [0, 2]",
            "Doubly periodic with period 2r/s and a 45-degree tilted square at s = 1 (lines y = +-x + (2n+1) r). The overshoot h acts only at s = 1; at h = 2 the curve shrinks to isolated points.",
        ),
        "frantz" => (
            "x = r tanh(s cos t)/tanh s,  y = r tanh(s sin t)/tanh s",
            "s >= 0 (s -> 0 is the circle, large s the square), r > 0",
            "Parametric squircle; rendered directly from the parametrisation.",
        ),
        "phase_grid" => (
            "sin(pi x) sin(pi y) = 0",
            "none",
            "The lines through every integer lattice point.",
        ),
        "lame3d" => (
            "|x|^p + |y|^p + |z|^p = r^p",
            "p in [1, inf], r > 0",
            "Superellipsoid: octahedron at p = 1, sphere at p = 2, cube at p = inf.",
        ),
        "sphube" => (
            "x^2+y^2+z^2 - (s^2/r^2)(x^2y^2+y^2z^2+x^2z^2) + (s^4/r^4) x^2y^2z^2 = r^2",
            "s in [0, 1], r > 0",
            "Sphere-to-cube blend whose z = 0 section is the fg squircle. Clipped to the cube of half-side r.",
        ),
        "periodic3d" => (
            "cos(s pi/2) = cos(s pi x/2r) cos(s pi y/2r) cos(s pi z/2r)",
            "s in [0, 1], r > 0",
            "Triply periodic (period 4r/s). One cell is shown unless --tiles > 1.",
        ),
        "oblique3d" => (
            "2 + cos(s pi) - floor(s) h = cos(s pi x/r) + cos(s pi y/r) + cos(s pi z/r)",
            "s in [0, 1], r > 0, overshoot h in [0, 4]",
            "Triply periodic (period 2r/s); an octahedron-like solid at s = 1. With s = 1, r = pi, h = 1 it is cos x + cos y + cos z = 0, the classic Schwarz P approximation. At h = 4 the surface vanishes.",
        ),
        "toroid" => (
            "(sqrt(x^2+y^2) - R)^2 + z^2 - (s^2 z^2 / r^2)(sqrt(x^2+y^2) - R)^2 = r^2",
            "s in [0, 1], tube radius r > 0, R > r",
            "Torus whose tube cross-section is the fg squircle: round at s = 0, square at s = 1.",
        ),
        "toroid_octic" => (
            "toroid equation with the square root removed by squaring (degree 8)",
            "s in [0, 1], tube radius r > 0, R > r",
            "Same surface as toroid, evaluated without square roots.",
        ),
        "cone_fg" => (
            "x^2 z^2 + y^2 z^2 - s^2 c^2 x^2 y^2 = z^4 / c^2,  0 <= z <= c",
            "s in [0, 1], height c > 0",
            "Cone with squircular cross-sections, apex at the origin, closed by a flat base at z = c.",
        ),
        "cone_lame" => (
            "|x/a|^p + |y/b|^p = (z/c)^p,  0 <= z <= c",
            "p in [1, 2], a, b, c > 0",
            "Cone with superelliptic cross-sections, closed by a flat base at z = c.",
        ),
        "cuboctahedron" => (
            "(x^2+y^2+z^2)/k^2 - (x^2y^2+y^2z^2+x^2z^2)/k^4 + cc x^2y^2z^2/k^6 = 1",
            "k > 0, cc > 0 (1.5..4 recommended; 2 is the classic value)",
            "Sextic with singular points at the twelve cuboctahedron vertices (+-k, +-k, 0) and permutations; clipped to the cube of half-side k.",
        ),
        _ => return None,
    };
    Some(format!("{name}\n  equation:   {equation}\n  parameters: {params}\n  {about}\n"))
}
