#pragma once

// Paley (q = 11) Hadamard matrix of order 12, first column not normalized.
inline constexpr const char* kPaley12 =
    "order 12\n"
    "1 1 1 1 1 1 1 1 1 1 1 1\n"
    "-1 1 1 -1 1 1 1 -1 -1 -1 1 -1\n"
    "-1 -1 1 1 -1 1 1 1 -1 -1 -1 1\n"
    "-1 1 -1 1 1 -1 1 1 1 -1 -1 -1\n"
    "-1 -1 1 -1 1 1 -1 1 1 1 -1 -1\n"
    "-1 -1 -1 1 -1 1 1 -1 1 1 1 -1\n"
    "-1 -1 -1 -1 1 -1 1 1 -1 1 1 1\n"
    "-1 1 -1 -1 -1 1 -1 1 1 -1 1 1\n"
    "-1 1 1 -1 -1 -1 1 -1 1 1 -1 1\n"
    "-1 1 1 1 -1 -1 -1 1 -1 1 1 -1\n"
    "-1 -1 1 1 1 -1 -1 -1 1 -1 1 1\n"
    "-1 1 -1 1 1 1 -1 -1 -1 1 -1 1\n";
