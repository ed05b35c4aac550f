//! Decomposition tables of `V(Λ_α) ⊗ V(Λ_α)`.

pub mod table;
pub mod young;

pub use table::{
    builtin_table, gl21_adjoint_table, gl_family_diagrams, gl_family_table, load_table, osp_family_labels,
    osp_family_table, osp_weight, save_table, table_from_str, table_to_string, DecompTable, DecompTerm, TableFamily,
    TableJson,
};
pub use young::{diagram_weight, enumerate_allowable, YoungDiagram};
