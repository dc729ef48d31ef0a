//! Tooling around [`rlp_core`]: a textual tree notation, a JSON conformance
//! suite runner, and the implementation of the `rlp` command-line tool.

pub mod cli;
pub mod conformance;
pub mod hexstr;
pub mod treetext;
