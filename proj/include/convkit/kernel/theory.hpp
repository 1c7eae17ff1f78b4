/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>
#include "convkit/kernel/theorem.hpp"
#include "convkit/syntax/parse.hpp"

namespace convkit {

/// Constants, predicates, axioms and saved theorems, with parent theories
/// searched depth-first. Readers may share a theory across threads;
/// mutation needs exclusive access (enforced by an internal lock).
class Theory : public Signature {
public:
    using Ptr = std::shared_ptr<Theory>;

    Theory(std::string name, std::vector<Ptr> parents);

    /// The builtin root theory PPLAMBDA (shared, immutable).
    static Ptr pplambda();

    std::string const & name() const { return m_name; }
    std::vector<Ptr> const & parents() const { return m_parents; }

    void new_constant(std::string const & name, Type const & ty, bool infix = false);
    void new_predicate(std::string const & name, Type const & ty);
    /// Asserts |-A. Free variables are allowed and read as schematic.
    Theorem new_axiom(std::string const & label, Formula const & a);
    void save_theorem(std::string const & label, Theorem const & th);
    /// Records `a` as a theorem without proof (trusted theory stores only).
    Theorem assert_theorem(std::string const & label, Formula const & a);

    Theorem axiom(std::string const & label) const;
    Theorem theorem(std::string const & label) const;
    /// Theory named `name` among this one and its ancestors.
    Ptr find_theory(std::string const & name) const;

    std::optional<ConstInfo> constant(std::string const & name) const override;
    std::optional<Type> predicate(std::string const & name) const override;

    // Local declarations, in declaration order.
    std::vector<std::pair<std::string, ConstInfo>> local_constants() const;
    std::vector<std::pair<std::string, Type>> local_predicates() const;
    std::vector<std::pair<std::string, Theorem>> local_axioms() const;
    std::vector<std::pair<std::string, Theorem>> local_theorems() const;

private:
    Theory(std::string name) : m_name(std::move(name)) {}
    bool declared(std::string const & name) const;
    std::optional<Theorem> find_axiom(std::string const & label) const;
    std::optional<Theorem> find_theorem(std::string const & label) const;
    void check_signature(Formula const & a) const;

    std::string m_name;
    std::vector<Ptr> m_parents;
    mutable std::shared_mutex m_mutex;
    std::vector<std::pair<std::string, ConstInfo>> m_constants;
    std::vector<std::pair<std::string, Type>> m_predicates;
    std::vector<std::pair<std::string, Theorem>> m_axioms;
    std::vector<std::pair<std::string, Theorem>> m_theorems;
};

/// `ty` is an instance of `pattern` (type variables of `pattern` may be
/// replaced consistently).
bool type_instance(Type const & pattern, Type const & ty);

} // namespace convkit
