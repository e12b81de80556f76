// Copyright 2026 The Delphi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "delphi/synth.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <unistd.h>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/process.hpp"
#include "delphi/sexpr.hpp"
#include "delphi/theory.hpp"

namespace delphi {

bool ConstraintStore::add(const Term& t) {
  Term n = partial_evaluate(t);
  if (n.is_true()) return false;
  if (!seen_.insert(n).second) return false;
  conjuncts_.push_back(n);
  return true;
}

bool check_candidate_against_store(const FunctionBinding& candidate, std::span<const Term> store,
                                   const AssumptionSet& assumptions, const ResidualChecker& residual) {
  std::vector<Term> open;
  for (const Term& c : store) {
    Term t = partial_evaluate(instantiate_functions(c, candidate));
    while (auto app = find_oracle_application(t)) {
      auto d = assumptions.lookup(app->symbol, app->inputs);
      if (!d) break;
      t = partial_evaluate(replace_at(t, app->position, *d));
    }
    if (t.is_false()) return false;
    if (!t.is_true()) open.push_back(t);
  }
  if (open.empty()) return true;
  if (!residual) return false;
  return residual(make_and(std::move(open)));
}

namespace {

std::string nt_name(const Sort& s) {
  switch (s.kind()) {
    case Sort::Kind::Bool: return "nt!Bool";
    case Sort::Kind::Int: return "nt!Int";
    case Sort::Kind::Real: return "nt!Real";
    case Sort::Kind::String: return "nt!String";
    case Sort::Kind::BitVec: return "nt!BV" + std::to_string(s.width());
    case Sort::Kind::Fn: break;
  }
  throw Error(ErrorKind::UnsupportedInput, "no default grammar for sort " + s.to_string());
}

Production term_prod(Term t) {
  Production p;
  p.term = std::move(t);
  p.sort = p.term.sort();
  return p;
}

Production placeholder(Production::Kind k, const Sort& s) {
  Production p;
  p.kind = k;
  p.sort = s;
  return p;
}

}  // namespace

Grammar default_grammar(const SynthTarget& t) {
  std::vector<Sort> sorts{t.codomain};
  auto want = [&](const Sort& s) {
    if (std::find(sorts.begin(), sorts.end(), s) == sorts.end()) sorts.push_back(s);
  };
  for (const auto& p : t.params) want(p.sort);
  want(Sort::boolean());

  Grammar g;
  auto nt = [&](const Sort& s) { return Term::var(nt_name(s), s); };
  for (const Sort& s : sorts) {
    NonTerminal n{nt_name(s), s, {}};
    for (const auto& p : t.params)
      if (p.sort == s) n.productions.push_back(term_prod(Term::var(p.name, p.sort)));
    Term x = nt(s);
    switch (s.kind()) {
      case Sort::Kind::Bool: {
        n.productions.push_back(term_prod(make_bool(true)));
        n.productions.push_back(term_prod(make_bool(false)));
        for (const Sort& o : sorts) {
          Term y = nt(o);
          if (o.is_int() || o.is_real()) {
            n.productions.push_back(term_prod(make_theory("<=", {y, y})));
            n.productions.push_back(term_prod(make_theory("<", {y, y})));
          } else if (o.is_bitvec()) {
            n.productions.push_back(term_prod(make_theory("bvule", {y, y})));
            n.productions.push_back(term_prod(make_theory("bvult", {y, y})));
          }
          if (!o.is_bool()) n.productions.push_back(term_prod(make_theory("=", {y, y})));
        }
        n.productions.push_back(term_prod(make_theory("not", {x})));
        n.productions.push_back(term_prod(make_theory("and", {x, x})));
        n.productions.push_back(term_prod(make_theory("or", {x, x})));
        break;
      }
      case Sort::Kind::Int:
      case Sort::Kind::Real:
        n.productions.push_back(placeholder(Production::Kind::AnyConstant, s));
        for (const char* op : {"+", "-", "*"}) n.productions.push_back(term_prod(make_theory(op, {x, x})));
        break;
      case Sort::Kind::BitVec:
        n.productions.push_back(placeholder(Production::Kind::AnyConstant, s));
        n.productions.push_back(term_prod(make_theory("bvnot", {x})));
        for (const char* op : {"bvadd", "bvsub", "bvand", "bvor", "bvxor", "bvshl", "bvlshr", "bvmul"})
          n.productions.push_back(term_prod(make_theory(op, {x, x})));
        break;
      case Sort::Kind::String:
        n.productions.push_back(placeholder(Production::Kind::AnyConstant, s));
        n.productions.push_back(term_prod(make_theory("str.++", {x, x})));
        break;
      case Sort::Kind::Fn: break;
    }
    if (!s.is_bool()) n.productions.push_back(term_prod(make_ite(nt(Sort::boolean()), x, x)));
    g.nonterminals.push_back(std::move(n));
  }
  return g;
}

// Enumerator

struct TermEnumerator::Impl {
  struct Prod {
    std::vector<std::size_t> holes;  // nonterminal index per hole, pre-order
    Term tmpl;
    std::size_t base = 0;
    std::optional<std::size_t> chain;
    std::vector<Term> leaves;
    bool leaf = false;
  };
  struct Nt {
    std::string name;
    Sort sort;
    std::vector<Prod> prods;
    std::vector<std::vector<Term>> bank;
    std::unordered_set<Term, TermHash> seen;
  };

  std::vector<Nt> nts;
  std::unordered_map<std::string, std::size_t> index;
  std::optional<std::size_t> max_depth;
  std::size_t built = 0;
  std::size_t total = 0;
  std::optional<std::size_t> limit;
  std::unordered_map<Term, std::size_t, TermHash> depth_memo;

  bool is_hole(const Term& t) const {
    if (!t.is_var()) return false;
    auto it = index.find(t.name());
    return it != index.end() && nts[it->second].sort == t.sort();
  }

  void collect_holes(const Term& t, std::vector<std::size_t>& out) const {
    if (is_hole(t)) {
      out.push_back(index.at(t.name()));
      return;
    }
    if (t.kind() == TermKind::Let || t.kind() == TermKind::Quant) {
      std::vector<std::size_t> inner;
      for (std::size_t i = 0; i < t.child_count(); ++i) collect_holes(t.child(i), inner);
      if (!inner.empty())
        throw Error(ErrorKind::UnsupportedInput, "nonterminal under a binder in a grammar production");
      return;
    }
    if (t.is_app())
      for (const Term& a : t.args()) collect_holes(a, out);
  }

  Term fill(const Term& t, std::span<const Term> with, std::size_t& k) const {
    if (is_hole(t)) return with[k++];
    if (!t.is_app() || t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(fill(a, with, k));
    return Term::app(t.name(), t.symbol_kind(), std::move(args), t.sort(),
                     std::vector<std::uint32_t>(t.indices().begin(), t.indices().end()));
  }

  std::size_t depth(const Term& t) {
    if (!t.is_app() || t.args().empty()) return 1;
    auto it = depth_memo.find(t);
    if (it != depth_memo.end()) return it->second;
    std::size_t d = 0;
    for (const Term& a : t.args()) d = std::max(d, depth(a));
    depth_memo.emplace(t, d + 1);
    return d + 1;
  }

  void add(Nt& n, std::size_t k, const Term& t) {
    if (max_depth && depth(t) > *max_depth) return;
    if (!n.seen.insert(t).second) return;
    n.bank[k].push_back(t);
    ++total;
  }

  void compositions(std::size_t remaining, std::size_t parts, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (parts == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (std::size_t s = 1; s + (parts - 1) <= remaining; ++s) {
      cur.push_back(s);
      compositions(remaining - s, parts - 1, cur, out);
      cur.pop_back();
    }
  }

  void build(std::size_t k) {
    for (auto& n : nts) n.bank.resize(k + 1);
    for (auto& n : nts) {
      for (const Prod& p : n.prods) {
        if (p.chain) continue;
        if (p.leaf) {
          for (const Term& l : p.leaves)
            if (l.size() == k) add(n, k, l);
          continue;
        }
        if (k < p.base + p.holes.size()) continue;
        std::vector<std::vector<std::size_t>> splits;
        std::vector<std::size_t> cur;
        compositions(k - p.base, p.holes.size(), cur, splits);
        for (const auto& split : splits) {
          std::vector<const std::vector<Term>*> lists;
          bool empty = false;
          for (std::size_t i = 0; i < split.size(); ++i) {
            lists.push_back(&nts[p.holes[i]].bank[split[i]]);
            if (lists.back()->empty()) empty = true;
          }
          if (empty) continue;
          std::vector<std::size_t> idx(lists.size(), 0);
          std::vector<Term> with(lists.size());
          for (;;) {
            for (std::size_t i = 0; i < lists.size(); ++i) with[i] = (*lists[i])[idx[i]];
            std::size_t pos = 0;
            add(n, k, fill(p.tmpl, with, pos));
            std::size_t i = lists.size();
            while (i > 0) {
              --i;
              if (++idx[i] < lists[i]->size()) break;
              idx[i] = 0;
              if (i == 0) goto done;
            }
          }
        done:;
        }
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& n : nts)
        for (const Prod& p : n.prods) {
          if (!p.chain) continue;
          std::vector<Term> from = nts[*p.chain].bank[k];
          for (const Term& t : from) {
            std::size_t before = n.bank[k].size();
            add(n, k, t);
            if (n.bank[k].size() != before) changed = true;
          }
        }
    }
  }

  void compute_limit() {
    // Longest derivation over the nonterminal graph; a reachable cycle means infinite.
    std::vector<int> state(nts.size(), 0);
    std::vector<std::size_t> longest(nts.size(), 0);
    bool cyclic = false;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      state[v] = 1;
      std::size_t best = 0;
      for (const Prod& p : nts[v].prods) {
        std::size_t s = 0;
        if (p.leaf) {
          for (const Term& l : p.leaves) s = std::max(s, l.size());
        } else if (p.chain) {
          if (state[*p.chain] == 1) cyclic = true;
          else if (state[*p.chain] == 0) visit(*p.chain);
          s = longest[*p.chain];
        } else {
          s = p.base;
          for (std::size_t h : p.holes) {
            if (state[h] == 1) cyclic = true;
            else if (state[h] == 0) visit(h);
            s += longest[h];
          }
        }
        best = std::max(best, s);
      }
      longest[v] = best;
      state[v] = 2;
    };
    visit(0);
    if (!cyclic) limit = longest[0];
  }
};

TermEnumerator::TermEnumerator(const SynthTarget& target, std::vector<Value> constants,
                               std::optional<std::size_t> max_depth)
    : impl_(std::make_unique<Impl>()) {
  Grammar g = target.grammar ? *target.grammar : default_grammar(target);
  impl_->max_depth = max_depth;
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    impl_->index.emplace(g.nonterminals[i].name, i);
    impl_->nts.push_back({g.nonterminals[i].name, g.nonterminals[i].sort, {}, {{}}, {}});
  }
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    for (const Production& pr : g.nonterminals[i].productions) {
      Impl::Prod p;
      switch (pr.kind) {
        case Production::Kind::AnyConstant:
          p.leaf = true;
          for (const Value& v : constants)
            if (v.sort() == pr.sort) p.leaves.push_back(Term::value(v));
          break;
        case Production::Kind::AnyVariable:
          p.leaf = true;
          for (const auto& v : target.params)
            if (v.sort == pr.sort) p.leaves.push_back(Term::var(v.name, v.sort));
          break;
        case Production::Kind::Term:
          p.tmpl = pr.term;
          if (impl_->is_hole(pr.term)) {
            p.chain = impl_->index.at(pr.term.name());
            break;
          }
          impl_->collect_holes(pr.term, p.holes);
          if (p.holes.empty()) {
            p.leaf = true;
            p.leaves.push_back(pr.term);
          } else {
            p.base = pr.term.size() - p.holes.size();
          }
          break;
      }
      impl_->nts[i].prods.push_back(std::move(p));
    }
  }
  impl_->compute_limit();
}

TermEnumerator::~TermEnumerator() = default;
TermEnumerator::TermEnumerator(TermEnumerator&&) noexcept = default;
TermEnumerator& TermEnumerator::operator=(TermEnumerator&&) noexcept = default;

const std::vector<Term>& TermEnumerator::terms_of_size(std::size_t size) {
  while (impl_->built < size) impl_->build(++impl_->built);
  static const std::vector<Term> none;
  if (size == 0) return none;
  return impl_->nts[0].bank[size];
}

std::optional<std::size_t> TermEnumerator::max_size() const { return impl_->limit; }

std::size_t TermEnumerator::bank_terms() const { return impl_->total; }

// Synthesizer

Synthesizer::Synthesizer(std::vector<SynthTarget> targets, SynthOptions options)
    : targets_(std::move(targets)), options_(std::move(options)) {
  if (targets_.empty()) throw Error(ErrorKind::InvalidProblem, "no synthesis targets");
}

Synthesizer::~Synthesizer() = default;

std::optional<FunctionBinding> Synthesizer::synthesize(std::span<const Term> store,
                                                       const AssumptionSet& assumptions,
                                                       const ResidualChecker& residual,
                                                       std::span<const Value> constants) {
  if (!options_.external_command.empty()) return external(store, assumptions, residual);
  return builtin(store, assumptions, residual, constants);
}

void Synthesizer::reset(std::vector<Value> pool) {
  pool_ = std::move(pool);
  enums_.clear();
  for (const auto& t : targets_) {
    std::optional<std::size_t> depth;
    if (!t.grammar) depth = options_.default_max_depth;
    enums_.emplace_back(t, pool_, depth);
  }
  started_ = true;
  cursor_size_ = targets_.size();
  cursor_index_ = 0;
}

namespace {

std::vector<Value> constant_pool(std::span<const Value> extra) {
  std::vector<Value> pool{Value::integer(0), Value::integer(1), Value::real(0), Value::real(1),
                          Value::boolean(true), Value::boolean(false), Value::string("")};
  std::unordered_set<Value, ValueHash> seen(pool.begin(), pool.end());
  auto push = [&](const Value& v) {
    if (seen.insert(v).second) pool.push_back(v);
  };
  for (const Value& v : extra) {
    if (v.sort().is_function()) continue;
    push(v);
  }
  return pool;
}

void splits_of(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::size_t s = 1; s + (parts - 1) <= total; ++s) {
    cur.push_back(s);
    splits_of(total - s, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<FunctionBinding> Synthesizer::builtin(std::span<const Term> store, const AssumptionSet& a,
                                                    const ResidualChecker& residual,
                                                    std::span<const Value> constants) {
  std::vector<Value> pool = constant_pool(constants);
  for (const auto& t : targets_) {
    for (const auto& p : t.params)
      if (p.sort.is_bitvec()) {
        for (int b : {0, 1}) {
          Value v = Value::bitvec(p.sort.width(), b);
          if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
        }
      }
    if (t.codomain.is_bitvec())
      for (int b : {0, 1}) {
        Value v = Value::bitvec(t.codomain.width(), b);
        if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
      }
  }
  // Only sorts with (Constant S) leaves matter; a change restarts enumeration.
  std::vector<Sort> constant_sorts;
  for (const auto& t : targets_) {
    Grammar g = t.grammar ? *t.grammar : default_grammar(t);
    for (const auto& nt : g.nonterminals)
      for (const auto& p : nt.productions)
        if (p.kind == Production::Kind::AnyConstant) constant_sorts.push_back(p.sort);
  }
  std::erase_if(pool, [&](const Value& v) {
    return std::find(constant_sorts.begin(), constant_sorts.end(), v.sort()) == constant_sorts.end();
  });
  if (!started_ || pool != pool_) reset(std::move(pool));

  std::optional<std::size_t> finite_total = 0;
  for (const auto& e : enums_) {
    if (!e.max_size()) {
      finite_total.reset();
      break;
    }
    *finite_total += *e.max_size();
  }
  const std::size_t n = targets_.size();
  for (;; ++cursor_size_, cursor_index_ = 0) {
    if (finite_total ? cursor_size_ > *finite_total : cursor_size_ > options_.max_size) {
      if (finite_total) return std::nullopt;
      throw Error(ErrorKind::BudgetExhausted,
                  "no candidate up to size " + std::to_string(options_.max_size));
    }
    std::vector<std::vector<std::size_t>> splits;
    std::vector<std::size_t> cur;
    splits_of(cursor_size_, n, cur, splits);
    std::size_t offset = 0;
    for (const auto& split : splits) {
      std::vector<const std::vector<Term>*> lists;
      std::size_t count = 1;
      for (std::size_t i = 0; i < n; ++i) {
        lists.push_back(&enums_[i].terms_of_size(split[i]));
        count *= lists.back()->size();
      }
      std::size_t banked = 0;
      for (const auto& e : enums_) banked += e.bank_terms();
      if (banked > options_.max_bank_terms)
        throw Error(ErrorKind::BudgetExhausted, "enumerator holds " + std::to_string(banked) + " terms");
      if (cursor_index_ >= offset + count) {
        offset += count;
        continue;
      }
      for (std::size_t flat = cursor_index_ - offset; flat < count; ++flat) {
        FunctionBinding cand;
        std::size_t r = flat;
        for (std::size_t i = n; i-- > 0;) {
          const auto& l = *lists[i];
          cand.emplace(targets_[i].name, FunctionDef{targets_[i].params, l[r % l.size()]});
          r /= l.size();
        }
        ++checked_;
        if (check_candidate_against_store(cand, store, a, residual)) {
          cursor_index_ = offset + flat;
          return cand;
        }
      }
      offset += count;
      cursor_index_ = offset;
    }
  }
}

// External SyGuS solver

namespace {

std::string print_production(const Production& p) {
  switch (p.kind) {
    case Production::Kind::AnyConstant: return "(Constant " + p.sort.to_string() + ")";
    case Production::Kind::AnyVariable: return "(Variable " + p.sort.to_string() + ")";
    case Production::Kind::Term: break;
  }
  return print_term(p.term);
}

}  // namespace

std::string sygus_benchmark(std::span<const SynthTarget> targets, std::span<const Term> store,
                            const std::string& logic) {
  std::ostringstream out;
  out << "(set-logic " << (logic.empty() ? "ALL" : logic) << ")\n";
  for (const auto& t : targets) {
    out << "(synth-fun " << quote_symbol(t.name) << " (";
    for (std::size_t i = 0; i < t.params.size(); ++i)
      out << (i ? " " : "") << "(" << quote_symbol(t.params[i].name) << " " << t.params[i].sort.to_string()
          << ")";
    out << ") " << t.codomain.to_string();
    if (t.grammar) {
      out << "\n  (";
      for (const auto& n : t.grammar->nonterminals)
        out << "(" << quote_symbol(n.name) << " " << n.sort.to_string() << ")";
      out << ")\n  (";
      for (const auto& n : t.grammar->nonterminals) {
        out << "(" << quote_symbol(n.name) << " " << n.sort.to_string() << " (";
        for (std::size_t i = 0; i < n.productions.size(); ++i)
          out << (i ? " " : "") << print_production(n.productions[i]);
        out << "))";
      }
      out << ")";
    }
    out << ")\n";
  }
  for (const Term& c : store)
    if (!contains_symbol_kind(c, SymbolKind::Oracle)) out << "(constraint " << print_term(c) << ")\n";
  out << "(check-synth)\n";
  return out.str();
}

std::optional<FunctionBinding> Synthesizer::external(std::span<const Term> store, const AssumptionSet& a,
                                                     const ResidualChecker& residual) {
  std::string text = sygus_benchmark(targets_, store, options_.logic);
  auto path = std::filesystem::temp_directory_path() /
              ("delphi-sygus-" + std::to_string(::getpid()) + "-" + std::to_string(checked_) + ".sl");
  {
    std::ofstream f(path);
    f << text;
  }
  std::vector<std::string> argv = options_.external_command;
  argv.push_back(path.string());
  ProcessResult r;
  try {
    r = run_process(argv);
  } catch (const std::exception& e) {
    std::filesystem::remove(path);
    throw Error(ErrorKind::ExternalSolverError, e.what());
  }
  std::filesystem::remove(path);
  ++checked_;

  std::vector<SExpr> items;
  try {
    items = read_sexprs(r.out);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ExternalSolverError, std::string("unreadable output: ") + e.what());
  }
  if (!items.empty() && items[0].is_symbol("infeasible")) return std::nullopt;

  std::vector<const SExpr*> defs;
  std::function<void(const SExpr&)> collect = [&](const SExpr& e) {
    if (e.is_call("define-fun")) {
      defs.push_back(&e);
    } else if (e.is_list()) {
      for (const auto& i : e.items) collect(i);
    }
  };
  for (const auto& e : items) collect(e);
  if (defs.empty())
    throw Error(ErrorKind::ExternalSolverError,
                "no solution from " + argv[0] + ": " + (r.out.empty() ? r.err : r.out));

  FunctionBinding cand;
  SymbolContext ctx;
  for (const SExpr* d : defs) {
    NamedDefinition nd = parse_define_fun(*d, ctx);
    cand.emplace(nd.name, nd.def);
  }
  for (const auto& t : targets_)
    if (!cand.count(t.name))
      throw Error(ErrorKind::ExternalSolverError, "solver gave no definition for " + t.name);
  if (!check_candidate_against_store(cand, store, a, residual))
    throw Error(ErrorKind::ExternalSolverError, "solver candidate violates the constraint store");
  return cand;
}

}  // namespace delphi
