#pragma once

#include <iosfwd>
#include <string>

#include "latpath/objective.hpp"
#include "latpath/polytope.hpp"

// Text file formats. All files are UTF-8 with LF line endings and
// space-separated tokens:
//
//   H-rep:      "n m" then m lines "a_1 ... a_n b"   (integers only)
//   V-rep:      "n v" then v lines of n rationals    ("p/q" or integers)
//   objective:  "n p" then 1+p lines of n rationals  (primary, then
//               perturbations)
//   signed permutation: one line of n signed integers
//
// Parsers are strict: wrong token counts, stray trailing data, CR line
// endings or non-integral H-rep entries raise ParseError.

namespace latpath {

HRep parse_hrep(std::istream& in);
void write_hrep(std::ostream& out, const HRep& h);
HRep read_hrep_file(const std::string& path);
void write_hrep_file(const std::string& path, const HRep& h);

VRep parse_vrep(std::istream& in);
void write_vrep(std::ostream& out, const VRep& v);
VRep read_vrep_file(const std::string& path);
void write_vrep_file(const std::string& path, const VRep& v);

Objective parse_objective(std::istream& in);
void write_objective(std::ostream& out, const Objective& o);
Objective read_objective_file(const std::string& path);
void write_objective_file(const std::string& path, const Objective& o);

SignedPermutation parse_sigma(std::istream& in);
void write_sigma(std::ostream& out, const SignedPermutation& s);
SignedPermutation read_sigma_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace latpath
