#pragma once

#include <string>
#include <vector>

#include "nlbox/bitvec.hpp"
#include "nlbox/bounds.hpp"
#include "nlbox/symmetry.hpp"

namespace nlbox {

// One block of the reference dataset: a translation subgroup, its input
// coset, and the symmetries recorded as stabilizing it.
struct FixtureSubset {
    int index = 0;
    std::vector<BitVec> t;
    std::vector<BitVec> x;
    std::vector<BitMatrix> r;
};

// A data line whose trailing comment marks an editorial correction
// ("inferred ..." or "replaced ...").
struct FixtureNote {
    int line = 0;
    std::string section;
    std::string text;
};

struct FixtureSet {
    int n = 0;
    std::vector<BitVec> inputs;
    std::vector<BitVec> translations;
    std::vector<FixtureSubset> subsets;
    std::vector<FixtureNote> notes;
};

// Reads a fixture file. Sections are introduced by "[inputs]",
// "[translations]" and "[subset M]" headers (M contiguous from 1); inside a
// subset the directives "T:", "X:" and "R:" open a translation list, an
// input list, or one n-row matrix. One vector per line, "#" starts a
// comment. Structural problems raise ParseError with the line number;
// content that cannot belong to its section (wrong parity, duplicates)
// raises FixtureError.
FixtureSet load_fixture_file(const std::string& path);

struct FixtureReport {
    std::vector<CheckResult> checks;
    std::vector<FixtureNote> notes;
    bool pass = false;
};

// Runs the full battery against a loaded fixture:
//   counts        every list has the size the space dictates
//   spaces        inputs and translations are exactly the admissible spaces
//   subgroup      each T is XOR-closed, self-orthogonal, contains 0 and 1...1
//   coset         each X is a coset of its T; all share a representative pair
//   intersection  distinct T meet exactly in {0...0, 1...1}
//   cover         every translation lies in exactly one T (up to the shared
//                 pair), likewise inputs and X
//   stabilizers   every R is orthogonal, odd-row, and maps its T onto itself
//   within_w      the symmetry parameter W vanishes on all quadruples drawn
//                 from one subset
FixtureReport verify_reference_fixture(const FixtureSet& f);

// Reads a settings quad from a file of "x1: <vector>" style lines (keys x1,
// x2, y1, y2 in any order, each exactly once, "#" comments allowed). Only
// structure is validated here; admissibility is the caller's concern.
SettingsQuad load_settings_file(const std::string& path);

}  // namespace nlbox
