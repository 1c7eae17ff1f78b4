// Shared helpers for the test binaries.
#pragma once
#include "convkit/kernel/theory.hpp"
#include "convkit/syntax/parse.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit::test {

inline Theory const & root() { return *Theory::pplambda(); }
inline Term qt(std::string const & s, Signature const & sig = root()) { return parse_term(s, sig); }
inline Formula qf(std::string const & s, Signature const & sig = root()) { return parse_form(s, sig); }
inline std::string str(Theorem const & th) { return print_theorem(th); }
inline Term var(std::string const & name, Type const & ty) { return Term::mk_var(name, ty); }

} // namespace convkit::test
