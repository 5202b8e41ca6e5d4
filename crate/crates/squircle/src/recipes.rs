//! Gallery: one-line invocations that render every shape variant the crate
//! supports, from the Lamé sweeps to the sham Schwarz cell.

/// A CLI invocation without its `--out` argument.
#[derive(Debug, Clone, Copy)]
pub struct Recipe {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Output extension, which also selects the format.
    pub ext: &'static str,
    /// At least one output is expected to be an empty level set.
    pub recedes: bool,
}

impl Recipe {
    pub fn is_sweep(&self) -> bool {
        self.args.first() == Some(&"sweep")
    }

    /// Full argument list writing to `out` (a stem for sweeps).
    pub fn command_line(&self, out: &str) -> Vec<String> {
        let mut v: Vec<String> = self.args.iter().map(|s| s.to_string()).collect();
        v.extend(["--format".into(), self.ext.into(), "--out".into()]);
        v.push(if self.is_sweep() {
            out.to_string()
        } else {
            format!("{out}.{}", self.ext)
        });
        v
    }
}

const fn r(name: &'static str, args: &'static [&'static str], ext: &'static str) -> Recipe {
    Recipe {
        name,
        args,
        ext,
        recedes: false,
    }
}

const fn receding(name: &'static str, args: &'static [&'static str], ext: &'static str) -> Recipe {
    Recipe {
        name,
        args,
        ext,
        recedes: true,
    }
}

pub const GALLERY: &[Recipe] = &[
    r("lame_upper_sweep", &["sweep", "--family", "lame", "--param", "p", "--from", "2", "--to", "8", "--steps", "4"], "svg"),
    r("lame_lower_sweep", &["sweep", "--family", "lame", "--param", "p", "--from", "1", "--to", "2", "--steps", "3"], "svg"),
    r("lame_square", &["curve", "--family", "lame", "--exponent", "inf"], "svg"),
    r("superellipsoid_p4", &["surface", "--family", "lame3d", "--exponent", "4"], "obj"),
    r("superellipsoid_p1_5", &["surface", "--family", "lame3d", "--exponent", "1.5"], "obj"),
    r("fg_sweep", &["sweep", "--family", "fg", "--param", "s", "--from", "0", "--to", "1", "--steps", "5"], "svg"),
    r("sphube", &["surface", "--family", "sphube", "--squareness", "0.8"], "obj"),
    r("frantz_sweep", &["sweep", "--family", "frantz", "--param", "s", "--from", "0", "--to", "4", "--steps", "5"], "svg"),
    r("periodic_sweep", &["sweep", "--family", "periodic", "--param", "s", "--from", "0.2", "--to", "1", "--steps", "5"], "svg"),
    r("periodic_tiling", &["curve", "--family", "periodic", "--squareness", "0.7", "--tiles", "3"], "svg"),
    r("periodic_square_grid", &["curve", "--family", "periodic", "--squareness", "1", "--tiles", "3"], "svg"),
    r(
        "periodic_horizontal_lines",
        &["curve", "--family", "periodic", "--squareness", "1", "--xmin", "-0.9", "--xmax", "0.9", "--ymin", "-5", "--ymax", "5"],
        "svg",
    ),
    r(
        "periodic_vertical_lines",
        &["curve", "--family", "periodic", "--squareness", "1", "--xmin", "-5", "--xmax", "5", "--ymin", "-0.9", "--ymax", "0.9"],
        "svg",
    ),
    r("phase_grid", &["curve", "--family", "phase_grid", "--tiles", "3"], "svg"),
    r("periodic3d_cell", &["surface", "--family", "periodic3d", "--squareness", "0.8"], "obj"),
    r("periodic3d_lattice", &["surface", "--family", "periodic3d", "--squareness", "0.8", "--tiles", "2"], "obj"),
    r("oblique_sweep", &["sweep", "--family", "oblique", "--param", "s", "--from", "0.2", "--to", "1", "--steps", "5"], "svg"),
    r("oblique_tiling", &["curve", "--family", "oblique", "--squareness", "0.7", "--tiles", "3"], "svg"),
    r("oblique_diagonal_lines", &["curve", "--family", "oblique", "--squareness", "1", "--tiles", "3"], "svg"),
    r("oblique3d_cell", &["surface", "--family", "oblique3d", "--squareness", "0.8"], "obj"),
    r("oblique3d_lattice", &["surface", "--family", "oblique3d", "--squareness", "0.8", "--tiles", "2"], "obj"),
    r("sham_octahedron", &["surface", "--family", "oblique3d", "--squareness", "1"], "obj"),
    receding(
        "overshoot_sweep",
        &["sweep", "--family", "oblique", "--squareness", "1", "--param", "h", "--from", "0", "--to", "2", "--steps", "5"],
        "svg",
    ),
    r("overshoot_tiling", &["curve", "--family", "oblique", "--squareness", "1", "--overshoot", "1", "--tiles", "3"], "svg"),
    receding(
        "overshoot3d_sweep",
        &["sweep", "--family", "oblique3d", "--squareness", "1", "--param", "h", "--from", "0", "--to", "4", "--steps", "5"],
        "obj",
    ),
    r("sham_schwarz", &["surface", "--family", "oblique3d", "--squareness", "1", "--radius", "pi", "--overshoot", "1"], "obj"),
    r("toroid_round", &["surface", "--family", "toroid", "--squareness", "0", "--R", "2", "--r", "0.5"], "obj"),
    r("toroid_square", &["surface", "--family", "toroid", "--squareness", "1", "--R", "2", "--r", "0.5"], "obj"),
    r(
        "half_toroid_sweep",
        &["sweep", "--family", "toroid", "--R", "2", "--r", "0.5", "--param", "s", "--from", "0", "--to", "1", "--steps", "3", "--ymin", "0"],
        "obj",
    ),
    r("cone_fg", &["surface", "--family", "cone_fg", "--squareness", "0.8", "--c", "3"], "obj"),
    r(
        "cone_lame_sweep",
        &["sweep", "--family", "cone_lame", "--a", "1", "--b", "1", "--c", "2", "--param", "p", "--from", "1", "--to", "2", "--steps", "3"],
        "obj",
    ),
    r("cuboctahedron", &["surface", "--family", "cuboctahedron", "--k", "1", "--cc", "2"], "obj"),
];
