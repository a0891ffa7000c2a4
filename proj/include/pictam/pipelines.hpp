#pragma once

#include <string>

#include "pictam/document.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/picard.hpp"

namespace pictam {

// Shared by the CLI and the Python module.

// Verdict document for a document of any kind.
Document validate_document(const Document& d);
// Throws InputError when p fails validate_picard.
void require_valid_picard(const PicardCategory& p);
// pi0, pi1 and q as the result of a single check.
Document invariants_document(const PicardCategory& p);
Document k_theory_document(const PicPtr& p, int level, const EnumerationOptions& opts);
Document corpus_document(const std::string& name);

}  // namespace pictam
