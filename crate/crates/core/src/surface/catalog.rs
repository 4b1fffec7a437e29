//! Shipped forms for the two residue relations.

/// `(q, form)` checked at the origin.
pub const POINT_CATALOG: &[(u64, &str)] = &[
    (2, "1/(u*t) * du^dt"),
    (2, "1/(u*t*(u+t)) * du^dt"),
    (2, "t * du^dt"),
    (2, "(u+1)/(u^2*t*(t+u^2)) * du^dt"),
    (2, "1/(t*(u+t^2)) * du^dt"),
    (2, "(1+u+t)/(u^2*t^3*(t+u+u^3)) * du^dt"),
    (3, "1/(u*t) * du^dt"),
    (3, "1/(u*t*(u+t)) * du^dt"),
    (3, "(u+2)/(u^2*t*(t+u^2)) * du^dt"),
    (3, "1/(t*(u+t^2)*(u-t)) * du^dt"),
    (3, "(1+t^2)/(u^3*t^2*(t+2*u)) * du^dt"),
    (3, "u/((u^2+1)*t*(u+t)) * du^dt"),
];

/// `(q, curve, form)` checked along the whole curve.
pub const CURVE_CATALOG: &[(u64, &str, &str)] = &[
    (2, "t=0", "1/(u*t) * du^dt"),
    (2, "t=0", "1/((u^2+u+1)*t) * du^dt"),
    (2, "t=0", "u^3/((u^2+u+1)*(u+1)*t^2) * du^dt"),
    (2, "u=1", "t * du^dt"),
    (2, "u=1", "1/((u+1)*t*(t+1)) * du^dt"),
    (2, "t=u^2+u", "1/(u*(t+u^2+u)) * du^dt"),
    (2, "t=1", "(u^3+t)/(u^2*(u+1)*(t+1)^2) * du^dt"),
    (3, "t=0", "1/(u*t) * du^dt"),
    (3, "t=0", "1/((u^2+1)*t) * du^dt"),
    (3, "t=0", "u/((u^2+1)*(u-1)*t) * du^dt"),
    (3, "u=2", "(t+1)/((u-2)*t^2*(t+u)) * du^dt"),
    (3, "t=u^2", "1/(u*(t-u^2)^2*(t+1)) * du^dt"),
    (3, "t=1", "(u+t)/(u^3*(t-1)) * du^dt"),
];
