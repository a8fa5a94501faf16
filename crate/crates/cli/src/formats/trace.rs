//! One line per applied reduction, in application order.
//!
//! ```text
//! SR <center> -> <target> chord <c1> <c2> attached <a1> <a2> <a3>
//! CR inner <x1> <x2> <x3> <x4> outer <v1> <v2> <v3> <v4>
//! ```

use std::fmt::Write;

use optimal1p::EditRecord;

pub fn write(trace: &[EditRecord]) -> String {
    let mut out = String::new();
    for rec in trace {
        match rec {
            EditRecord::Sr {
                center,
                target,
                chord,
                attached,
            } => writeln!(
                out,
                "SR {center} -> {target} chord {} {} attached {} {} {}",
                chord[0], chord[1], attached[0], attached[1], attached[2]
            ),
            EditRecord::Cr { inner, outer } => writeln!(
                out,
                "CR inner {} {} {} {} outer {} {} {} {}",
                inner[0], inner[1], inner[2], inner[3], outer[0], outer[1], outer[2], outer[3]
            ),
        }
        .unwrap();
    }
    out
}
