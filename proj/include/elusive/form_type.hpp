#pragma once

namespace elusive {

enum class FormType {
  Plus,        // even dim, Witt index n/2
  Minus,       // even dim, Witt index n/2 - 1
  Odd,         // odd dim, nondegenerate
  Degenerate,  // singular radical
  Symplectic,  // alternating with no compatible quadratic refinement
};

const char* form_type_name(FormType t);

}  // namespace elusive
