#pragma once

#include <string>

#include "zcz/sequence.hpp"

namespace zcz {

// Text format, one set per file:
//   ZCZSET v1 alphabet=<p|ternary> N=<int> M=<int> [claim=zcz:<int>|claim=delta:<float>]
// followed by M body lines: N digits in [0, p) for p-phase sets (p <= 10),
// or N characters from {+, -, 0} for ternary sets. Sets outside those
// alphabets are written as JSON carrying digits+order or complex entries.

bool text_representable(const SequenceSet& s);

std::string write_setfile_text(const SequenceSet& s);
std::string write_setfile_json(const SequenceSet& s);
std::string write_setfile(const SequenceSet& s);

SequenceSet parse_setfile(const std::string& content);

SequenceSet load_setfile(const std::string& path);
void save_setfile(const SequenceSet& s, const std::string& path);

}  // namespace zcz
