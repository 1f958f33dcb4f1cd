// Copyright 2026 The latpar Authors
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

#include "latpar/feature_structure.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

namespace latpar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_attr(const std::string& a) {
  if (a.empty()) return false;
  for (unsigned char c : a) {
    if (std::isspace(c) || std::isupper(c) || std::iscntrl(c)) return false;
  }
  return true;
}

}  // namespace

bool value_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const Atom& x) { return x == std::get<Atom>(b); },
          [&](const Variable& x) { return x == std::get<Variable>(b); },
          [&](const FsPtr& x) { return *x == *std::get<FsPtr>(b); },
      },
      a);
}

FeatureStructure& FeatureStructure::set(std::string attr, Value v) {
  if (!valid_attr(attr))
    throw Error("feature structure: invalid attribute '" + attr + "'");
  slots_[std::move(attr)] = std::move(v);
  return *this;
}

const Value* FeatureStructure::find(std::string_view attr) const {
  auto it = slots_.find(std::string(attr));
  return it == slots_.end() ? nullptr : &it->second;
}

const Value* FeatureStructure::at_path(std::string_view dotted) const {
  const FeatureStructure* cur = this;
  const Value* found = nullptr;
  std::size_t pos = 0;
  while (pos <= dotted.size()) {
    std::size_t dot = dotted.find('.', pos);
    std::string_view step = dotted.substr(
        pos, dot == std::string_view::npos ? std::string_view::npos
                                           : dot - pos);
    if (step.empty()) return nullptr;
    found = cur->find(step);
    if (!found) return nullptr;
    if (dot == std::string_view::npos) return found;
    const auto* sub = std::get_if<FsPtr>(found);
    if (!sub) return nullptr;
    cur = sub->get();
    pos = dot + 1;
  }
  return nullptr;
}

bool FeatureStructure::operator==(const FeatureStructure& o) const {
  if (slots_.size() != o.slots_.size()) return false;
  auto it = slots_.begin();
  auto jt = o.slots_.begin();
  for (; it != slots_.end(); ++it, ++jt) {
    if (it->first != jt->first || !value_equal(it->second, jt->second))
      return false;
  }
  return true;
}

std::string value_canonical(const Value& v) {
  return std::visit(
      overloaded{
          [](const Atom& a) {
            return std::visit(
                overloaded{[](const std::string& s) { return s; },
                           [](std::int64_t n) { return std::to_string(n); }},
                a);
          },
          [](const Variable& x) { return "?" + x.name; },
          [](const FsPtr& p) { return p->canonical(); },
      },
      v);
}

std::string FeatureStructure::canonical() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, v] : slots_) {
    if (!first) out += ", ";
    first = false;
    out += k;
    out += ":";
    out += value_canonical(v);
  }
  out += "]";
  return out;
}

bool FeatureStructure::ground() const {
  for (const auto& [k, v] : slots_) {
    (void)k;
    bool ok = std::visit(
        overloaded{[](const Atom&) { return true; },
                   [](const Variable&) { return false; },
                   [](const FsPtr& p) { return p->ground(); }},
        v);
    if (!ok) return false;
  }
  return true;
}

Value FeatureStructure::value_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == '?') {
      std::string name = s.substr(1);
      if (name.empty())
        throw Error("feature structure: empty variable name '?'");
      return Variable{std::move(name)};
    }
    return Atom{std::move(s)};
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return Atom{j.get<std::int64_t>()};
  if (j.is_object()) return FsPtr(std::make_shared<FeatureStructure>(from_json(j)));
  throw Error("feature structure: unsupported JSON value " + j.dump());
}

FeatureStructure FeatureStructure::from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw Error("feature structure: expected a JSON object, got " + j.dump());
  FeatureStructure fs;
  for (auto it = j.begin(); it != j.end(); ++it)
    fs.set(it.key(), value_from_json(it.value()));
  return fs;
}

nlohmann::json FeatureStructure::value_to_json(const Value& v) {
  return std::visit(
      overloaded{
          [](const Atom& a) {
            return std::visit(
                overloaded{
                    [](const std::string& s) { return nlohmann::json(s); },
                    [](std::int64_t n) { return nlohmann::json(n); }},
                a);
          },
          [](const Variable& x) { return nlohmann::json("?" + x.name); },
          [](const FsPtr& p) { return p->to_json(); },
      },
      v);
}

nlohmann::json FeatureStructure::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : slots_) j[k] = value_to_json(v);
  return j;
}

Value atom(std::string token) { return Atom{std::move(token)}; }
Value atom(const char* token) { return Atom{std::string(token)}; }
Value atom(std::int64_t n) { return Atom{n}; }
Value var(std::string name) { return Variable{std::move(name)}; }
Value nested(FeatureStructure fs) {
  return FsPtr(std::make_shared<FeatureStructure>(std::move(fs)));
}

// ---------------------------------------------------------------------------
// Unification

namespace {

const Value* lookup(const Bindings& env, const std::string& name) {
  auto it = env.find(name);
  return it == env.end() ? nullptr : &it->second;
}

// Follows variable bindings to the representative value. The environment is
// kept acyclic by the occurs check, so this terminates.
Value resolve(Value v, const Bindings& env) {
  while (const auto* x = std::get_if<Variable>(&v)) {
    const Value* bound = lookup(env, x->name);
    if (!bound) break;
    v = *bound;
  }
  return v;
}

bool occurs(const std::string& name, const Value& v, const Bindings& env) {
  Value r = resolve(v, env);
  if (const auto* x = std::get_if<Variable>(&r)) return x->name == name;
  if (const auto* p = std::get_if<FsPtr>(&r)) {
    for (const auto& [k, sub] : (*p)->slots()) {
      (void)k;
      if (occurs(name, sub, env)) return true;
    }
  }
  return false;
}

std::optional<Value> unify_values(const Value& a, const Value& b,
                                  Bindings& env);

std::optional<FeatureStructure> unify_fs(const FeatureStructure& a,
                                         const FeatureStructure& b,
                                         Bindings& env) {
  FeatureStructure out;
  for (const auto& [k, va] : a.slots()) {
    const Value* vb = b.find(k);
    if (!vb) {
      out.set(k, va);
      continue;
    }
    auto merged = unify_values(va, *vb, env);
    if (!merged) return std::nullopt;
    out.set(k, *merged);
  }
  for (const auto& [k, vb] : b.slots()) {
    if (!a.find(k)) out.set(k, vb);
  }
  return out;
}

std::optional<Value> unify_values(const Value& a, const Value& b,
                                  Bindings& env) {
  Value ra = resolve(a, env);
  Value rb = resolve(b, env);

  const auto* xa = std::get_if<Variable>(&ra);
  const auto* xb = std::get_if<Variable>(&rb);
  if (xa && xb) {
    if (xa->name == xb->name) return ra;
    // Bind the lexicographically larger name to the smaller one so the
    // result does not depend on argument order.
    const Variable& keep = xa->name < xb->name ? *xa : *xb;
    const Variable& drop = xa->name < xb->name ? *xb : *xa;
    env[drop.name] = Variable{keep.name};
    return Value{keep};
  }
  if (xa) {
    if (occurs(xa->name, rb, env)) return std::nullopt;
    env[xa->name] = rb;
    return rb;
  }
  if (xb) {
    if (occurs(xb->name, ra, env)) return std::nullopt;
    env[xb->name] = ra;
    return ra;
  }

  const auto* pa = std::get_if<FsPtr>(&ra);
  const auto* pb = std::get_if<FsPtr>(&rb);
  if (pa && pb) {
    auto merged = unify_fs(**pa, **pb, env);
    if (!merged) return std::nullopt;
    return nested(std::move(*merged));
  }
  if (pa || pb) return std::nullopt;  // atom vs structure

  if (std::get<Atom>(ra) == std::get<Atom>(rb)) return ra;
  return std::nullopt;
}

}  // namespace

std::optional<FeatureStructure> unify(const FeatureStructure& a,
                                      const FeatureStructure& b) {
  Bindings env;
  auto merged = unify_fs(a, b, env);
  if (!merged) return std::nullopt;
  // Bindings are acyclic (occurs check), so substitution cannot throw.
  return substitute(*merged, env);
}

// ---------------------------------------------------------------------------
// Subsumption

namespace {

bool subsume_values(const Value& g, const Value& s, Bindings& env) {
  if (const auto* xg = std::get_if<Variable>(&g)) {
    const Value* bound = lookup(env, xg->name);
    if (bound) return value_equal(*bound, s);
    env[xg->name] = s;
    return true;
  }
  if (std::holds_alternative<Variable>(s)) return false;

  const auto* pg = std::get_if<FsPtr>(&g);
  const auto* ps = std::get_if<FsPtr>(&s);
  if (pg && ps) {
    for (const auto& [k, vg] : (*pg)->slots()) {
      const Value* vs = (*ps)->find(k);
      if (!vs || !subsume_values(vg, *vs, env)) return false;
    }
    return true;
  }
  if (pg || ps) return false;
  return std::get<Atom>(g) == std::get<Atom>(s);
}

}  // namespace

bool subsumes(const FeatureStructure& general,
              const FeatureStructure& specific) {
  Bindings env;
  return subsume_values(nested(general), nested(specific), env);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

Value subst_value(const Value& v, const Bindings& b,
                  std::set<std::string>& active) {
  if (const auto* x = std::get_if<Variable>(&v)) {
    const Value* bound = lookup(b, x->name);
    if (!bound) return v;
    if (!active.insert(x->name).second)
      throw CyclicBindingError("cyclic variable binding through '?" +
                               x->name + "'");
    Value out = subst_value(*bound, b, active);
    active.erase(x->name);
    return out;
  }
  if (const auto* p = std::get_if<FsPtr>(&v)) {
    FeatureStructure out;
    for (const auto& [k, sub] : (*p)->slots())
      out.set(k, subst_value(sub, b, active));
    return nested(std::move(out));
  }
  return v;
}

}  // namespace

Value substitute_value(const Value& v, const Bindings& b) {
  std::set<std::string> active;
  return subst_value(v, b, active);
}

FeatureStructure substitute(const FeatureStructure& fs, const Bindings& b) {
  std::set<std::string> active;
  FeatureStructure out;
  for (const auto& [k, v] : fs.slots()) out.set(k, subst_value(v, b, active));
  return out;
}

}  // namespace latpar
