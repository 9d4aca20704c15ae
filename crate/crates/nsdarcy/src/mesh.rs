//! Two-layer rectangular geometry.
//!
//! The fluid occupies (0,1)x(0,1), the porous medium (0,1)x(-1,0). The flat
//! interface Gamma = [0,1]x{0} separates them; Gamma1 is the remaining
//! (outer) porous boundary, Gamma2 the remaining fluid boundary. Grids match
//! across the interface: the vertex layer at y = 0 is shared.
//!
//! The interface normal n is the outward unit normal of the fluid domain on
//! Gamma, i.e. it points into the porous layer: n = (0,-1), t = (1,0).

use crate::error::{Error, Result};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Porous,
    Fluid,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::Porous => "porous",
            Region::Fluid => "fluid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetTag {
    /// Fluid-porous interface (y = 0).
    Gamma,
    /// Outer porous boundary (x = 0, x = 1 for y < 0, and y = -1).
    Gamma1,
    /// Outer fluid boundary (x = 0, x = 1 for y > 0, and y = 1).
    Gamma2,
    Interior,
}

impl FacetTag {
    pub fn name(self) -> &'static str {
        match self {
            FacetTag::Gamma => "gamma",
            FacetTag::Gamma1 => "gamma1",
            FacetTag::Gamma2 => "gamma2",
            FacetTag::Interior => "interior",
        }
    }
}

/// Structured quadrilateral mesh of the layered rectangle.
///
/// Cells are axis-aligned with counter-clockwise connectivity starting at
/// the lower-left vertex. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub vertices: Vec<[f64; 2]>,
    pub cells: Vec<[usize; 4]>,
    pub cell_region: Vec<Region>,
    pub facets: Vec<[usize; 2]>,
    pub facet_tag: Vec<FacetTag>,
    /// Adjacent cells per facet. For Gamma facets the first entry is the
    /// porous cell and the second the fluid cell.
    pub facet_cells: Vec<(usize, Option<usize>)>,
    pub refinement_level: u32,
    pub nx: usize,
    pub ny_fluid: usize,
    pub ny_porous: usize,
}

impl Mesh {
    /// Structured mesh with `nx` cells across and `ny_porous` / `ny_fluid`
    /// cells through the porous and fluid layers.
    pub fn build_layered_rectangle(nx: usize, ny_fluid: usize, ny_porous: usize) -> Result<Mesh> {
        if nx < 1 || ny_fluid < 1 || ny_porous < 1 {
            return Err(Error::invalid(format!(
                "cell counts must be >= 1, got nx={nx}, ny_fluid={ny_fluid}, ny_porous={ny_porous}"
            )));
        }
        let ny = ny_porous + ny_fluid;
        let vid = |i: usize, j: usize| j * (nx + 1) + i;

        let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
        for j in 0..=ny {
            let y = if j <= ny_porous {
                -1.0 + j as f64 / ny_porous as f64
            } else {
                (j - ny_porous) as f64 / ny_fluid as f64
            };
            for i in 0..=nx {
                vertices.push([i as f64 / nx as f64, y]);
            }
        }

        let mut cells = Vec::with_capacity(nx * ny);
        let mut cell_region = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                cells.push([vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)]);
                cell_region.push(if j < ny_porous {
                    Region::Porous
                } else {
                    Region::Fluid
                });
            }
        }
        let cid = |i: usize, j: usize| j * nx + i;

        let mut facets = Vec::new();
        let mut facet_tag = Vec::new();
        let mut facet_cells = Vec::new();
        // horizontal facets (constant y)
        for j in 0..=ny {
            for i in 0..nx {
                facets.push([vid(i, j), vid(i + 1, j)]);
                if j == 0 {
                    facet_tag.push(FacetTag::Gamma1);
                    facet_cells.push((cid(i, 0), None));
                } else if j == ny {
                    facet_tag.push(FacetTag::Gamma2);
                    facet_cells.push((cid(i, ny - 1), None));
                } else if j == ny_porous {
                    facet_tag.push(FacetTag::Gamma);
                    // porous cell first, fluid cell second
                    facet_cells.push((cid(i, j - 1), Some(cid(i, j))));
                } else {
                    facet_tag.push(FacetTag::Interior);
                    facet_cells.push((cid(i, j - 1), Some(cid(i, j))));
                }
            }
        }
        // vertical facets (constant x)
        for j in 0..ny {
            for i in 0..=nx {
                facets.push([vid(i, j), vid(i, j + 1)]);
                if i == 0 || i == nx {
                    let owner = if i == 0 { cid(0, j) } else { cid(nx - 1, j) };
                    facet_cells.push((owner, None));
                    facet_tag.push(if j < ny_porous {
                        FacetTag::Gamma1
                    } else {
                        FacetTag::Gamma2
                    });
                } else {
                    facet_tag.push(FacetTag::Interior);
                    facet_cells.push((cid(i - 1, j), Some(cid(i, j))));
                }
            }
        }

        Ok(Mesh {
            vertices,
            cells,
            cell_region,
            facets,
            facet_tag,
            facet_cells,
            refinement_level: 0,
            nx,
            ny_fluid,
            ny_porous,
        })
    }

    /// Uniform refinement: every quadrilateral splits into four, all tags
    /// are inherited, the refinement level increments.
    pub fn refine(&self) -> Mesh {
        let mut m =
            Mesh::build_layered_rectangle(2 * self.nx, 2 * self.ny_fluid, 2 * self.ny_porous)
                .expect("refine of a valid mesh cannot fail");
        m.refinement_level = self.refinement_level + 1;
        m
    }

    /// Mesh size: the largest cell edge length.
    pub fn h(&self) -> f64 {
        let hx = 1.0 / self.nx as f64;
        let hy = (1.0 / self.ny_fluid as f64).max(1.0 / self.ny_porous as f64);
        hx.max(hy)
    }

    /// Unit normal/tangent frame on an interface facet. The normal is the
    /// outward normal of the fluid domain (pointing into the porous layer).
    pub fn interface_frame(&self, facet: usize) -> Result<([f64; 2], [f64; 2])> {
        if facet >= self.facets.len() || self.facet_tag[facet] != FacetTag::Gamma {
            return Err(Error::invalid(format!(
                "facet {facet} is not tagged as interface"
            )));
        }
        let [a, b] = self.facets[facet];
        let (pa, pb) = (self.vertices[a], self.vertices[b]);
        let mut t = [pb[0] - pa[0], pb[1] - pa[1]];
        let len = (t[0] * t[0] + t[1] * t[1]).sqrt();
        t = [t[0] / len, t[1] / len];
        // orient the tangent with increasing x, then rotate -90 degrees so
        // the normal points downward (out of the fluid)
        if t[0] < 0.0 {
            t = [-t[0], -t[1]];
        }
        let n = [t[1], -t[0]];
        Ok((n, t))
    }

    pub fn facet_length(&self, facet: usize) -> f64 {
        let [a, b] = self.facets[facet];
        let (pa, pb) = (self.vertices[a], self.vertices[b]);
        ((pb[0] - pa[0]).powi(2) + (pb[1] - pa[1]).powi(2)).sqrt()
    }

    /// Lower-left corner and edge lengths of an (axis-aligned) cell.
    pub fn cell_box(&self, cell: usize) -> ([f64; 2], [f64; 2]) {
        let c = self.cells[cell];
        let p0 = self.vertices[c[0]];
        let p2 = self.vertices[c[2]];
        (p0, [p2[0] - p0[0], p2[1] - p0[1]])
    }

    pub fn cell_area(&self, cell: usize) -> f64 {
        let (_, d) = self.cell_box(cell);
        d[0] * d[1]
    }

    pub fn region_area(&self, region: Region) -> f64 {
        (0..self.cells.len())
            .filter(|&c| self.cell_region[c] == region)
            .map(|c| self.cell_area(c))
            .sum()
    }

    pub fn facets_with_tag(&self, tag: FacetTag) -> impl Iterator<Item = usize> + '_ {
        (0..self.facets.len()).filter(move |&f| self.facet_tag[f] == tag)
    }

    pub fn cells_in_region(&self, region: Region) -> impl Iterator<Item = usize> + '_ {
        (0..self.cells.len()).filter(move |&c| self.cell_region[c] == region)
    }

    /// Plain-text export: `dim=2` header, vertex lines `v x y`, cell lines
    /// `c i0 i1 i2 i3 region`, facet lines `f i0 i1 tag`.
    pub fn write_text(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "dim=2")?;
        for v in &self.vertices {
            writeln!(w, "v {:.16e} {:.16e}", v[0], v[1])?;
        }
        for (c, cell) in self.cells.iter().enumerate() {
            writeln!(
                w,
                "c {} {} {} {} {}",
                cell[0],
                cell[1],
                cell[2],
                cell[3],
                self.cell_region[c].name()
            )?;
        }
        for (f, facet) in self.facets.iter().enumerate() {
            writeln!(
                w,
                "f {} {} {}",
                facet[0],
                facet[1],
                self.facet_tag[f].name()
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_grid_counts() {
        let m = Mesh::build_layered_rectangle(1, 1, 1).unwrap();
        assert_eq!(m.cells.len(), 2);
        assert_eq!(m.facets_with_tag(FacetTag::Gamma).count(), 1);
        assert_eq!(m.facets_with_tag(FacetTag::Gamma1).count(), 3);
        assert_eq!(m.facets_with_tag(FacetTag::Gamma2).count(), 3);
    }

    #[test]
    fn counting_4x4() {
        let m = Mesh::build_layered_rectangle(4, 4, 4).unwrap();
        assert_eq!(m.cells.len(), 32);
        assert_eq!(m.facets_with_tag(FacetTag::Gamma).count(), 4);
    }

    #[test]
    fn mesh_size_reported() {
        let m = Mesh::build_layered_rectangle(8, 8, 8).unwrap();
        assert_eq!(m.h(), 1.0 / 8.0);
    }

    #[test]
    fn nonpositive_counts_rejected() {
        assert!(Mesh::build_layered_rectangle(0, 1, 1).is_err());
        assert!(Mesh::build_layered_rectangle(1, 0, 1).is_err());
        assert!(Mesh::build_layered_rectangle(1, 1, 0).is_err());
    }

    #[test]
    fn refine_splits_cells() {
        let m = Mesh::build_layered_rectangle(1, 1, 1).unwrap();
        let r = m.refine();
        assert_eq!(r.cells.len(), 8);
        assert_eq!(r.refinement_level, 1);
    }

    #[test]
    fn refine_twice_halves_h_twice() {
        let m = Mesh::build_layered_rectangle(2, 2, 2).unwrap();
        let r = m.refine().refine();
        assert_eq!(r.h(), 1.0 / 8.0);
        assert_eq!(r.refinement_level, 2);
    }

    #[test]
    fn gamma_facets_double_under_refinement() {
        let m = Mesh::build_layered_rectangle(4, 4, 4).unwrap();
        let r = m.refine();
        assert_eq!(r.facets_with_tag(FacetTag::Gamma).count(), 8);
    }

    #[test]
    fn interface_frame_is_orthonormal_and_downward() {
        let m = Mesh::build_layered_rectangle(4, 4, 4).unwrap();
        for f in m.facets_with_tag(FacetTag::Gamma) {
            let (n, t) = m.interface_frame(f).unwrap();
            assert_eq!(n, [0.0, -1.0]);
            assert_eq!(t, [1.0, 0.0]);
            assert!((n[0] * t[0] + n[1] * t[1]).abs() < 1e-15);
        }
    }

    #[test]
    fn interface_frame_rejects_outer_facets() {
        let m = Mesh::build_layered_rectangle(2, 2, 2).unwrap();
        let f1 = m.facets_with_tag(FacetTag::Gamma1).next().unwrap();
        assert!(m.interface_frame(f1).is_err());
    }

    #[test]
    fn gamma_separates_porous_and_fluid() {
        let m = Mesh::build_layered_rectangle(3, 2, 4).unwrap();
        for f in m.facets_with_tag(FacetTag::Gamma) {
            let (pc, fc) = m.facet_cells[f];
            assert_eq!(m.cell_region[pc], Region::Porous);
            assert_eq!(m.cell_region[fc.unwrap()], Region::Fluid);
        }
    }

    #[test]
    fn region_areas_and_gamma_length() {
        let mut m = Mesh::build_layered_rectangle(4, 4, 4).unwrap();
        for _ in 0..3 {
            assert!((m.region_area(Region::Porous) - 1.0).abs() < 1e-15);
            assert!((m.region_area(Region::Fluid) - 1.0).abs() < 1e-15);
            let glen: f64 = m
                .facets_with_tag(FacetTag::Gamma)
                .map(|f| m.facet_length(f))
                .sum();
            assert!((glen - 1.0).abs() < 1e-15);
            m = m.refine();
        }
    }

    #[test]
    fn refinement_preserves_partition() {
        let m = Mesh::build_layered_rectangle(2, 3, 1).unwrap();
        let r = m.refine();
        for c in 0..r.cells.len() {
            let (p0, d) = r.cell_box(c);
            let yc = p0[1] + 0.5 * d[1];
            let expect = if yc < 0.0 { Region::Porous } else { Region::Fluid };
            assert_eq!(r.cell_region[c], expect);
        }
    }

    #[test]
    fn text_export_format() {
        let m = Mesh::build_layered_rectangle(1, 1, 1).unwrap();
        let mut buf = Vec::new();
        m.write_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "dim=2");
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 6);
        assert_eq!(text.lines().filter(|l| l.starts_with("c ")).count(), 2);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 7);
        assert!(text.contains("porous") && text.contains("fluid"));
    }
}
