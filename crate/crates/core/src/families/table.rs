use super::FamilySpec;

const fn row(row: u32, template: &'static str, formula: &'static str) -> FamilySpec {
    FamilySpec { row, template, formula }
}

/// Braced expressions in a template are evaluated and replaced by their
/// value; everything else is Conway notation.
pub(super) static TABLE: [FamilySpec; 62] = [
    row(1, "({2p+1}) (i^{2k-1}) ({2q+1})", "GCD((2p+1)(2q+1),4pq-1)"),
    row(2, "({2p+1}) (i^{2k-1}) -({2q+1})", "GCD((2p+1)(2q+1),4pq+4p+1)"),
    row(3, "({2p}) 1 (i^{2k-1}) 1 ({2q})", "GCD((2p+1)(2q+1),4pq-1)"),
    row(4, "({2p+1}),({2q+1}),(i^{2k})", "GCD((2p+1)(2q+1),p+q+1)"),
    row(5, "({2p+1}),-({2q+1}),(i^{2k})", "GCD((2p+1)(2q+1),p-q)"),
    row(6, "({2p+1}),({2q}) 1,(i^{2k})", "GCD((2p+1)(2q+1),4pq+4q+1)"),
    row(7, "({2p+1}),-({2q}) (-1),(i^{2k})", "GCD((2p+1)(2q+1),4pq-1)"),
    row(8, "({2p+1}) (i^{2k}) 1 ({2q})", "GCD((2p+1)(2q+1),4pq+4q+1)"),
    row(9, "({2p+1}) (i^{2k}) (-1) (-{2q})", "GCD((2p+1)(2q+1),4pq-1)"),
    row(10, "({2p}) 1,({2q}) 1,(i^{2k})", "GCD((2p+1)(2q+1),4pq+p+q)"),
    row(11, "6*({2p}).({2q}) 0.(i^{2k-1})", "GCD(12pq-2p-2q-1,3p+3q+1)"),
    row(12, "6*({2p}).({2q}) 0.(i^{2k-1}) 0", "GCD(12pq-2p-2q-1,12pq+4p+4q+1)"),
    row(13, "6*({2p}).({2q}) 0.(i^{2k-1}).(-1).(-1).(-1)", "GCD(12pq-10p-10q+3,3p+3q-1)"),
    row(14, "6*({2p}).({2q}) 0.(i^{2k-1}) 0.(-1).(-1).(-1)", "GCD(12pq-10p-10q+3,12pq-4p-4q+1)"),
    row(15, "6*({2p}).({2q}) 0::(i^{2k-1})", "GCD(4pq+2p+2q-3,4pq+3p+3q)"),
    row(16, "6*({2p}).({2q}) 0::(i^{2k-1}) 0", "GCD(4pq+2p+2q-3,4pq+4p+4q+3)"),
    row(17, "8*(i^{2k-1})::(i^{2m-1})", "3"),
    row(18, "8*(i^{2k-1}) 0::(i^{2m-1})", "3"),
    row(19, "8*(i^{2k-1}) 0::(i^{2m-1}) 0", "3"),
    row(20, "({2p+1}),({2q+1}),(i^{2k})+(i^{2m-1})", "GCD((2p+1)(2q+1),4pq+4p+4q+3)"),
    row(21, "({2p+1}),-({2q+1}),(i^{2k})+(i^{2m-1})", "GCD((2p+1)(2q+1),4pq+4q+1)"),
    row(
        22,
        "({2p}) ({2q}) (i^{2k-1}) ({2r}) ({2s})",
        "GCD(16pqrs-8pqs-8prs+4pq+4rs-2p-2s+1,16pqrs+4pq+4rs+1)",
    ),
    row(
        23,
        "({2p}) ({2q}) (i^{2k-1}) -({2r}) -({2s})",
        "GCD(16pqrs+8pqs-8prs+4pq+4rs-2p+2s+1,16pqrs+4pq+4rs+1)",
    ),
    row(24, "({2p+1}),({2q}) 1,(i^{2k})+(i^{2m-1})", "GCD((2p+1)(2q+1),4pq+p+3q+1)"),
    row(25, "({2p+1}),-({2q}) (-1),(i^{2k})+(i^{2m-1})", "GCD((2p+1)(2q+1),4pq+p+q)"),
    row(26, "({2p}) 1,({2q}) 1,(i^{2k})+(i^{2m-1})", "GCD((2p+1)(2q+1),12pq+4p+4q+1)"),
    row(27, "6*(i^{2k-1}).({2p}):(i^{2m}).({2q}) 0", "GCD(12pq+4p+4q+1,4pq+4p+4q+3)"),
    row(28, "6*(i^{2k-1}) 0.({2p}):(i^{2m}).({2q}) 0", "GCD(12pq+4p+4q+1,4pq+4p+4q+3)"),
    row(29, "6*.(i^{2k}):-({2p}).({2q}) 0", "GCD(8pq+6p-4q-1,2pq+2p-3q-1)"),
    row(
        30,
        "6*.({2p}).(i^{2k-1}).-({2q}).({2r}) 0.(i^{2m-1})",
        "GCD(8pqr+8pq-4pr+4p-2q+1,4pqr+4pq-4pr+2qr+q-r)",
    ),
    row(31, "6*.({2p}):(i^{2k}).({2q}) 0", "GCD(12pq+4p+4q+1,4pq+4p+4q+3)"),
    row(32, "({2p}) 1 1 (i^{2k-1}) 1 1 ({2q})", "GCD(2p+2q+1,(4p+1)(4q+1))"),
    row(33, "8*(i^{2k}) 0::(i^{2m-1})", "3"),
    row(34, "8*(i^{2k}) 0::(i^{2m-1}) 0", "3"),
    row(35, "8*(i^{2k}) 0::(i^{2m-1}).(-1).(-1).(-1)", "9"),
    row(36, "8*(i^{2k}) 0::(i^{2m-1}) 0.(-1).(-1).(-1)", "9"),
    row(37, "8*({2p}) 0.(-1).(i^{2k-1}).(-1).(-1).(-1).(i^{2m-1}).(-1)", "GCD(8p+1,9)"),
    row(38, "8*({2p}) 0.(-1).(i^{2k-1}) 0.(-1).(-1).(-1).(i^{2m-1}).(-1)", "GCD(8p+1,9)"),
    row(39, "8*({2p}) 0.(-1).(i^{2k-1}) 0.(-1).(-1).(-1).(i^{2m-1}) 0.(-1)", "GCD(8p+1,9)"),
    row(40, "(i^{2k-1}),({2p+1}),({2q+1})", "GCD(4pq-1,p+q+1)"),
    row(41, "(i^{2k-1}),({2p}) 1,({2q}) 1", "GCD(4pq-1,4pq+p+q)"),
    row(42, "6*({2p}) 0.(i^{2k}) 0:({2q}).(i^{2m-1})", "GCD(4pq-1,8pq+3p+3q+1)"),
    row(43, "6*({2p}) 0.(i^{2k}) 0:({2q}).(i^{2m-1}) 0", "GCD(4pq-1,(2p+1)(2q+1))"),
    row(
        44,
        "6*({2p}).(i^{2k-1}).({2q}):({2r}) 0",
        "GCD(16pqr+4pq-4pr-4qr-1,16pqr+4pq+4pr+4qr+2p+2q+1)",
    ),
    row(45, "6*({2p}).(i^{2k-1}) 0.({2q}):({2r}) 0", "GCD(16pqr+4pq-4pr-4qr-1,4pr+4qr+p+q+1)"),
    row(46, "6*({2p}):({2q}):(i^{2k}) 0", "GCD(4pq+4p+4q+3,4pq+3p+3q)"),
    row(47, "9*(i^{2k-1})::::(i^{2m-1})", "5"),
    row(48, "9*(i^{2k-1}) 0::::(i^{2m-1})", "5"),
    row(49, "9*(i^{2k-1}) 0::::(i^{2m-1}) 0", "5"),
    row(50, "9*.(i^{2k-1}):.(i^{2m-1}):.(i^{2n-1})", "3"),
    row(51, "9*.(i^{2k-1}) 0:.(i^{2m-1}):.(i^{2n-1})", "3"),
    row(52, "9*.(i^{2k-1}) 0:.(i^{2m-1}) 0:.(i^{2n-1})", "3"),
    row(53, "9*.(i^{2k-1}) 0:.(i^{2m-1}) 0:.(i^{2n-1}) 0", "3"),
    row(54, "9*.(i^{2k-1}).(-1):(i^{2m-1}).(-1):(i^{2n-1}).(-1)", "9"),
    row(55, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}).(-1):(i^{2n-1}).(-1)", "9"),
    row(56, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}) 0.(-1):(i^{2n-1}).(-1)", "9"),
    row(57, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}) 0.(-1):(i^{2n-1}) 0.(-1)", "9"),
    row(58, "6*(i^{2k}) 0:({2p}) 0:({2q}) 0", "GCD(12pq+4p+4q+1,3p+3q+1)"),
    row(
        59,
        "6*({2p}) 0.(i^{2k-1}).({2q}) 0:({2r}) 0",
        "GCD(4pq+4pr+4qr-4r-1,4pq+4pr+4qr+2p+2q+4r+1)",
    ),
    row(
        60,
        "6*({2p}) 0.(i^{2k-1}) 0.({2q}) 0:({2r}) 0",
        "GCD(4pq+4pr+4qr-4r-1,4pq+4pr+4qr+p+q)",
    ),
    row(61, "({2p}) 1 i,({2p+1}),-({2p+1})", "(2p+1)(2p+1)(2p+1)"),
    row(62, "({2p}) 1 i,3,-3", "18p+9"),
];
