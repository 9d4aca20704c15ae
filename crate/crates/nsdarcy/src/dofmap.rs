//! Per-field degree-of-freedom numbering with essential-boundary masks.
//!
//! The discretization is the Taylor-Hood style triple
//!   Darcy pressure p: Q2 on the porous layer, p = 0 on Gamma1,
//!   fluid velocity u: Q2 vector on the fluid layer, u = 0 on Gamma2,
//!   fluid pressure pi: Q1 on the fluid layer, unconstrained.
//! No degrees of freedom on the interface carry essential conditions.
//!
//! Vector dofs are numbered node-major with interleaved components,
//! dof = 2*node + component.

use crate::error::{Error, Result};
use crate::mesh::{Mesh, Region};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    DarcyP,
    FluidU,
    FluidPi,
}

impl Field {
    pub fn degree(self) -> usize {
        match self {
            Field::DarcyP | Field::FluidU => 2,
            Field::FluidPi => 1,
        }
    }

    pub fn components(self) -> usize {
        match self {
            Field::FluidU => 2,
            _ => 1,
        }
    }

    pub fn region(self) -> Region {
        match self {
            Field::DarcyP => Region::Porous,
            _ => Region::Fluid,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DofMap {
    pub field: Field,
    pub degree: usize,
    /// Global dofs per mesh cell, node-major (components interleaved for
    /// vector fields); empty for cells outside the field's region.
    pub cell_dofs: Vec<Vec<usize>>,
    pub n_dofs: usize,
    pub essential: Vec<bool>,
    pub coords: Vec<[f64; 2]>,
    /// full dof -> free dof (None on essential dofs)
    pub free_index: Vec<Option<usize>>,
    /// free dof -> full dof
    pub free_dofs: Vec<usize>,
    /// Full dof ids whose node lies on the interface, nodes sorted by x,
    /// components interleaved for vector fields.
    pub gamma_dofs: Vec<usize>,
    fingerprint: (usize, usize, usize, u32),
}

impl DofMap {
    pub fn new(mesh: &Mesh, field: Field) -> DofMap {
        let nx = mesh.nx;
        let (ny, y0) = match field.region() {
            Region::Porous => (mesh.ny_porous, -1.0),
            Region::Fluid => (mesh.ny_fluid, 0.0),
        };
        let deg = field.degree();
        let comps = field.components();
        let nxn = deg * nx + 1; // nodes across
        let nyn = deg * ny + 1; // nodes through the layer
        let n_nodes = nxn * nyn;
        let n_dofs = comps * n_nodes;

        let mut coords = vec![[0.0, 0.0]; n_dofs];
        let mut essential = vec![false; n_dofs];
        for jn in 0..nyn {
            let y = y0 + jn as f64 / (deg * ny) as f64;
            for in_ in 0..nxn {
                let x = in_ as f64 / (deg * nx) as f64;
                let node = jn * nxn + in_;
                let ess = match field {
                    Field::DarcyP => x == 0.0 || x == 1.0 || jn == 0,
                    Field::FluidU => x == 0.0 || x == 1.0 || jn == nyn - 1,
                    Field::FluidPi => false,
                };
                for c in 0..comps {
                    coords[comps * node + c] = [x, y];
                    essential[comps * node + c] = ess;
                }
            }
        }

        let mut cell_dofs = vec![Vec::new(); mesh.cells.len()];
        for cell in mesh.cells_in_region(field.region()) {
            // structured layout: cell = j*nx + i in mesh ordering
            let j_mesh = cell / nx;
            let i = cell % nx;
            let j = match field.region() {
                Region::Porous => j_mesh,
                Region::Fluid => j_mesh - mesh.ny_porous,
            };
            let mut dofs = Vec::with_capacity(comps * (deg + 1) * (deg + 1));
            for ly in 0..=deg {
                for lx in 0..=deg {
                    let node = (deg * j + ly) * nxn + (deg * i + lx);
                    for c in 0..comps {
                        dofs.push(comps * node + c);
                    }
                }
            }
            cell_dofs[cell] = dofs;
        }

        let mut free_index = vec![None; n_dofs];
        let mut free_dofs = Vec::new();
        for d in 0..n_dofs {
            if !essential[d] {
                free_index[d] = Some(free_dofs.len());
                free_dofs.push(d);
            }
        }

        // interface nodes: y = 0 is the bottom row of the fluid grid and the
        // top row of the porous grid
        let gamma_row = match field.region() {
            Region::Porous => nyn - 1,
            Region::Fluid => 0,
        };
        let mut gamma_dofs = Vec::with_capacity(comps * nxn);
        for in_ in 0..nxn {
            let node = gamma_row * nxn + in_;
            for c in 0..comps {
                gamma_dofs.push(comps * node + c);
            }
        }

        DofMap {
            field,
            degree: deg,
            cell_dofs,
            n_dofs,
            essential,
            coords,
            free_index,
            free_dofs,
            gamma_dofs,
            fingerprint: (mesh.nx, mesh.ny_fluid, mesh.ny_porous, mesh.refinement_level),
        }
    }

    pub fn n_free(&self) -> usize {
        self.free_dofs.len()
    }

    pub fn matches(&self, mesh: &Mesh) -> bool {
        self.fingerprint == (mesh.nx, mesh.ny_fluid, mesh.ny_porous, mesh.refinement_level)
    }

    pub fn check_matches(&self, mesh: &Mesh) -> Result<()> {
        if self.matches(mesh) {
            Ok(())
        } else {
            Err(Error::invalid("dof map does not belong to this mesh"))
        }
    }

    pub fn restrict(&self, full: &[f64]) -> Vec<f64> {
        assert_eq!(full.len(), self.n_dofs);
        self.free_dofs.iter().map(|&d| full[d]).collect()
    }

    pub fn prolong(&self, free: &[f64]) -> Vec<f64> {
        assert_eq!(free.len(), self.free_dofs.len());
        let mut full = vec![0.0; self.n_dofs];
        for (i, &d) in self.free_dofs.iter().enumerate() {
            full[d] = free[i];
        }
        full
    }

    /// Nodal interpolation of a scalar function; valid for scalar fields.
    pub fn interpolate_scalar(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        assert_eq!(self.field.components(), 1);
        self.coords.iter().map(|c| f(c[0], c[1])).collect()
    }

    /// Nodal interpolation of a vector function; valid for vector fields.
    pub fn interpolate_vector(&self, f: impl Fn(f64, f64) -> [f64; 2]) -> Vec<f64> {
        assert_eq!(self.field.components(), 2);
        let mut out = vec![0.0; self.n_dofs];
        for node in 0..self.n_dofs / 2 {
            let c = self.coords[2 * node];
            let v = f(c[0], c[1]);
            out[2 * node] = v[0];
            out[2 * node + 1] = v[1];
        }
        out
    }
}
