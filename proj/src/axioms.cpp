#include "condalg/axioms.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "condalg/normalizer.hpp"

namespace condalg {

namespace {

Term c(const Term &x, const Term &y, const Term &z) { return Term::make_cond(x, y, z); }

struct LawContext {
    const std::vector<Term> &vars;
    const Term &a;      // the atom parameter; T for schemes without one
    const Term &layers; // all-F layered term over the active sigma
};

using LawBuilder = std::function<std::pair<Term, Term>(const LawContext &)>;

struct AxiomDef {
    AxiomScheme scheme;
    LawBuilder build;
};

std::vector<AxiomDef> cp_base() {
    const Term t = Term::make_true();
    const Term f = Term::make_false();
    return {
        {{"CP1", {"x", "y"}},
         [t](const LawContext &k) { return std::pair{c(k.vars[0], t, k.vars[1]), k.vars[0]}; }},
        {{"CP2", {"x", "y"}},
         [f](const LawContext &k) { return std::pair{c(k.vars[0], f, k.vars[1]), k.vars[1]}; }},
        {{"CP3", {"x"}}, [t, f](const LawContext &k) { return std::pair{c(t, k.vars[0], f), k.vars[0]}; }},
        {{"CP4", {"x", "y", "z", "u", "v"}},
         [](const LawContext &k) {
             const auto &[x, y, z, u, v] = std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4]);
             return std::pair{c(x, c(y, z, u), v), c(c(x, y, v), z, c(x, u, v))};
         }},
    };
}

std::vector<AxiomDef> rp_laws() {
    return {
        {{"CPrp1", {"x", "y", "z"}, true},
         [](const LawContext &k) {
             const auto &[x, y, z] = std::tie(k.vars[0], k.vars[1], k.vars[2]);
             return std::pair{c(c(x, k.a, y), k.a, z), c(c(x, k.a, x), k.a, z)};
         }},
        {{"CPrp2", {"x", "y", "z"}, true},
         [](const LawContext &k) {
             const auto &[x, y, z] = std::tie(k.vars[0], k.vars[1], k.vars[2]);
             return std::pair{c(x, k.a, c(y, k.a, z)), c(x, k.a, c(z, k.a, z))};
         }},
    };
}

std::vector<AxiomDef> cr_laws() {
    return {
        {{"CPcr1", {"x", "y", "z"}, true},
         [](const LawContext &k) {
             const auto &[x, y, z] = std::tie(k.vars[0], k.vars[1], k.vars[2]);
             return std::pair{c(c(x, k.a, y), k.a, z), c(x, k.a, z)};
         }},
        {{"CPcr2", {"x", "y", "z"}, true},
         [](const LawContext &k) {
             const auto &[x, y, z] = std::tie(k.vars[0], k.vars[1], k.vars[2]);
             return std::pair{c(x, k.a, c(y, k.a, z)), c(x, k.a, z)};
         }},
    };
}

AxiomDef contract_true() {
    return {{"contract-true", {"w", "y", "v", "x"}}, [](const LawContext &k) {
                const auto &[w, y, v, x] = std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3]);
                return std::pair{c(c(w, y, v), y, x), c(w, y, x)};
            }};
}

std::vector<AxiomDef> mem_laws() {
    return {
        {{"CPmem", {"x", "y", "z", "u", "v", "w"}},
         [](const LawContext &k) {
             const auto &[x, y, z, u, v, w] =
                 std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4], k.vars[5]);
             return std::pair{c(x, y, c(z, u, c(v, y, w))), c(x, y, c(z, u, w))};
         }},
        {{"CPm1", {"z", "u", "w", "y", "v", "x"}},
         [](const LawContext &k) {
             const auto &[z, u, w, y, v, x] =
                 std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4], k.vars[5]);
             return std::pair{c(c(z, u, c(w, y, v)), y, x), c(c(z, u, w), y, x)};
         }},
        {{"CPm2", {"x", "y", "v", "w", "u", "z"}},
         [](const LawContext &k) {
             const auto &[x, y, v, w, u, z] =
                 std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4], k.vars[5]);
             return std::pair{c(x, y, c(c(v, y, w), u, z)), c(x, y, c(w, u, z))};
         }},
        {{"CPm3", {"w", "y", "v", "u", "z", "x"}},
         [](const LawContext &k) {
             const auto &[w, y, v, u, z, x] =
                 std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4], k.vars[5]);
             return std::pair{c(c(c(w, y, v), u, z), y, x), c(c(w, u, z), y, x)};
         }},
        {{"contract-false", {"x", "y", "v", "w"}},
         [](const LawContext &k) {
             const auto &[x, y, v, w] = std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3]);
             return std::pair{c(x, y, c(v, y, w)), c(x, y, w)};
         }},
        contract_true(),
    };
}

std::vector<AxiomDef> static_laws() {
    const Term t = Term::make_true();
    const Term f = Term::make_false();
    return {
        {{"CPs", {"x"}}, [f](const LawContext &k) { return std::pair{c(f, k.vars[0], f), f}; }},
        {{"and-commute", {"x", "y"}},
         [f](const LawContext &k) {
             return std::pair{c(k.vars[0], k.vars[1], f), c(k.vars[1], k.vars[0], f)};
         }},
        {{"redundant-condition", {"p", "q"}},
         [](const LawContext &k) { return std::pair{k.vars[0], c(k.vars[0], k.vars[1], k.vars[0])}; }},
        {{"layered-prefix", {"p"}},
         [t](const LawContext &k) { return std::pair{k.vars[0], c(t, k.layers, k.vars[0])}; }},
    };
}

AxiomDef cp_stat() {
    return {{"CPstat", {"x", "y", "z", "u", "v"}}, [](const LawContext &k) {
                const auto &[x, y, z, u, v] =
                    std::tie(k.vars[0], k.vars[1], k.vars[2], k.vars[3], k.vars[4]);
                return std::pair{c(c(x, y, z), u, v), c(c(x, u, v), y, c(z, u, v))};
            }};
}

std::vector<AxiomDef> definitions(AxiomSystem system) {
    std::vector<AxiomDef> out = cp_base();
    auto append = [&out](std::vector<AxiomDef> more) {
        for(AxiomDef &d : more)
            out.push_back(std::move(d));
    };
    switch(system) {
    case AxiomSystem::CP:
        break;
    case AxiomSystem::CPrp:
        append(rp_laws());
        break;
    case AxiomSystem::CPcr:
        append(cr_laws());
        break;
    case AxiomSystem::CPmem:
        append(mem_laws());
        break;
    case AxiomSystem::CPs:
        append(mem_laws());
        append(static_laws());
        break;
    case AxiomSystem::CPst:
        out.push_back(cp_stat());
        out.push_back(contract_true());
        break;
    }
    return out;
}

std::string render_count(std::uint64_t n) { return std::to_string(n); }

} // namespace

std::string axiom_system_name(AxiomSystem system) {
    switch(system) {
    case AxiomSystem::CP:
        return "CP";
    case AxiomSystem::CPrp:
        return "CPrp";
    case AxiomSystem::CPcr:
        return "CPcr";
    case AxiomSystem::CPmem:
        return "CPmem";
    case AxiomSystem::CPs:
        return "CPs";
    case AxiomSystem::CPst:
        return "CPst";
    }
    return "?";
}

AxiomSystem parse_axiom_system(std::string_view text) {
    for(AxiomSystem s : {AxiomSystem::CP, AxiomSystem::CPrp, AxiomSystem::CPcr, AxiomSystem::CPmem,
                         AxiomSystem::CPs, AxiomSystem::CPst}) {
        if(axiom_system_name(s) == text)
            return s;
    }
    throw Error("unknown axiom system '" + std::string(text) +
                "' (expected CP, CPrp, CPcr, CPmem, CPs or CPst)");
}

CongruenceKind matching_congruence(AxiomSystem system, const Sigma &sigma) {
    switch(system) {
    case AxiomSystem::CP:
        return CongruenceKind::free();
    case AxiomSystem::CPrp:
        return CongruenceKind::rp();
    case AxiomSystem::CPcr:
        return CongruenceKind::cr();
    case AxiomSystem::CPmem:
        return CongruenceKind::mem();
    case AxiomSystem::CPs:
    case AxiomSystem::CPst:
        return CongruenceKind::static_over(sigma);
    }
    return CongruenceKind::free();
}

int axiom_system_rank(AxiomSystem system) { return matching_congruence(system, Sigma()).rank(); }

std::vector<AxiomScheme> axiom_schemes(AxiomSystem system) {
    std::vector<AxiomScheme> out;
    for(const AxiomDef &d : definitions(system))
        out.push_back(d.scheme);
    return out;
}

std::vector<AxiomInstanceReport> check_axioms(AxiomSystem system, const std::vector<Term> &pool,
                                              const CongruenceKind &kind,
                                              const AxiomCheckOptions &options) {
    if(pool.empty())
        throw Error("axiom check needs a nonempty term pool");

    AtomSet pool_atoms;
    for(const Term &t : pool)
        pool_atoms.merge(alphabet(t));
    const std::vector<Atom> atoms(pool_atoms.begin(), pool_atoms.end());
    const Sigma sigma = kind.is_static() ? kind.sigma() : Sigma(atoms);
    const Term layers = e_sigma(sigma);

    std::vector<AxiomInstanceReport> reports;
    for(const AxiomDef &def : definitions(system)) {
        const std::size_t arity = def.scheme.variables.size();
        const std::uint64_t atom_choices = def.scheme.has_atom_parameter ? atoms.size() : 1;

        std::uint64_t total = atom_choices;
        bool over = false;
        for(std::size_t i = 0; i < arity; ++i)
            over = over || __builtin_mul_overflow(total, pool.size(), &total);
        if(over || total > options.max_instances_per_axiom) {
            AxiomInstanceReport r;
            r.axiom_name = def.scheme.name;
            r.verdict = AxiomInstanceReport::Verdict::BudgetExceeded;
            r.detail = "more than " + render_count(options.max_instances_per_axiom) +
                       " instances; skipped";
            reports.push_back(std::move(r));
            continue;
        }

        std::vector<std::size_t> index(arity, 0);
        std::vector<Term> vars(arity);
        for(std::uint64_t ai = 0; ai < atom_choices; ++ai) {
            const Term a = def.scheme.has_atom_parameter ? Term::make_atom(atoms[ai])
                                                         : Term::make_true();
            std::fill(index.begin(), index.end(), 0);
            while(true) {
                for(std::size_t i = 0; i < arity; ++i)
                    vars[i] = pool[index[i]];

                AxiomInstanceReport r;
                r.axiom_name = def.scheme.name;
                for(std::size_t i = 0; i < arity; ++i)
                    r.substitution.emplace_back(def.scheme.variables[i], vars[i]);
                if(def.scheme.has_atom_parameter)
                    r.substitution.emplace_back("a", a);
                try {
                    auto [lhs, rhs] = def.build(LawContext{vars, a, layers});
                    r.lhs = lhs;
                    r.rhs = rhs;
                    r.verdict = equivalent(lhs, rhs, kind, options.node_budget)
                                    ? AxiomInstanceReport::Verdict::Holds
                                    : AxiomInstanceReport::Verdict::Fails;
                } catch(const BudgetExceeded &e) {
                    r.verdict = AxiomInstanceReport::Verdict::BudgetExceeded;
                    r.detail = e.what();
                }
                reports.push_back(std::move(r));

                // Odometer over the pool indices, last variable fastest.
                std::size_t pos = arity;
                while(pos > 0) {
                    --pos;
                    if(++index[pos] < pool.size())
                        break;
                    index[pos] = 0;
                    if(pos == 0) {
                        pos = arity + 1;
                        break;
                    }
                }
                if(arity == 0 || pos == arity + 1)
                    break;
            }
        }
    }
    return reports;
}

} // namespace condalg
