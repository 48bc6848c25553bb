#pragma once

#include <string>

#include "ireal/syntax.hpp"

namespace test {

inline std::string corpus(const std::string& name) { return std::string(IREAL_CORPUS_DIR) + "/" + name; }

inline ireal::Signature corpus_signature() {
  return ireal::parse_signature(ireal::read_file(corpus("signature.sexp")));
}

inline ireal::Term term(const std::string& text, const ireal::Signature& sig = ireal::Signature::standard(),
                        const ireal::TypeContext& free = {}) {
  return ireal::parse_term(text, sig, free);
}

inline ireal::Formula formula(const std::string& text, const ireal::Signature& sig = ireal::Signature::standard()) {
  return ireal::parse_formula(text, sig);
}

inline ireal::Type type(const std::string& text, const ireal::Signature& sig = ireal::Signature::standard()) {
  return ireal::parse_type(text, sig);
}

}  // namespace test
