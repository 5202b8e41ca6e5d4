//! OBJ, binary STL, SVG and CSV writers.
//!
//! All writers are byte-deterministic: coordinates are printed with a fixed
//! number of digits and nothing time- or host-dependent is emitted.

use std::io::{self, Write};

use squircle_core::{Domain2D, Polyline, TriangleMesh};

pub const TOOL: &str = concat!("squircle ", env!("CARGO_PKG_VERSION"));

/// Wavefront OBJ with a two-line comment header naming the tool and shape.
pub fn write_obj<W: Write>(mesh: &TriangleMesh, shape: &str, w: &mut W) -> io::Result<()> {
    writeln!(w, "# {TOOL}")?;
    writeln!(w, "# {shape}")?;
    for [x, y, z] in &mesh.vertices {
        writeln!(w, "v {x:.9} {y:.9} {z:.9}")?;
    }
    for [a, b, c] in &mesh.triangles {
        writeln!(w, "f {} {} {}", a + 1, b + 1, c + 1)?;
    }
    Ok(())
}

/// Binary STL. Normals follow the counter-clockwise winding.
pub fn write_stl<W: Write>(mesh: &TriangleMesh, shape: &str, w: &mut W) -> io::Result<()> {
    // A header starting with "solid" makes some readers expect ASCII.
    let mut header = [0u8; 80];
    let text = format!("{TOOL} binary: {shape}");
    let n = text.len().min(80);
    header[..n].copy_from_slice(&text.as_bytes()[..n]);
    w.write_all(&header)?;
    let count = u32::try_from(mesh.triangles.len())
        .map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "too many triangles for STL"))?;
    w.write_all(&count.to_le_bytes())?;
    for t in &mesh.triangles {
        let [a, b, c] = mesh.corners(t);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        let mut n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if len > 0.0 {
            n = n.map(|c| c / len);
        }
        for p in [n, a, b, c] {
            for c in p {
                w.write_all(&(c as f32).to_le_bytes())?;
            }
        }
        w.write_all(&[0, 0])?;
    }
    Ok(())
}

/// SVG with one stroked path per polyline; `y` points up as in the domain.
pub fn write_svg<W: Write>(polylines: &[Polyline], domain: &Domain2D, w: &mut W) -> io::Result<()> {
    let width = domain.xmax - domain.xmin;
    let height = domain.ymax - domain.ymin;
    let px_w = 800.0;
    let px_h = (px_w * height / width).round().max(1.0);
    let stroke = 0.002 * width.max(height);
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px_w}" height="{px_h}" viewBox="{:.9} {:.9} {:.9} {:.9}">"#,
        domain.xmin,
        0.0 - domain.ymax,
        width,
        height
    )?;
    writeln!(w, r#"<g fill="none" stroke="black" stroke-width="{stroke:.9}" stroke-linejoin="round">"#)?;
    for line in polylines {
        w.write_all(b"<path d=\"")?;
        for (k, [x, y]) in line.points.iter().enumerate() {
            let cmd = if k == 0 { "M" } else { " L" };
            // `0.0 - y` keeps "-0.000000000" out of the output.
            write!(w, "{cmd}{x:.9},{:.9}", 0.0 - y)?;
        }
        if line.closed {
            w.write_all(b" Z")?;
        }
        w.write_all(b"\"/>\n")?;
    }
    writeln!(w, "</g>")?;
    writeln!(w, "</svg>")?;
    Ok(())
}

pub const CSV_HEADER: &str = "polyline_id,point_index,x,y,closed";

pub fn write_csv<W: Write>(polylines: &[Polyline], w: &mut W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for (id, line) in polylines.iter().enumerate() {
        for (k, [x, y]) in line.points.iter().enumerate() {
            writeln!(w, "{id},{k},{x:.9},{y:.9},{}", line.closed)?;
        }
    }
    Ok(())
}
