#include "meadow/serialize.hpp"

#include <nlohmann/json.hpp>

#include "meadow/error.hpp"

namespace meadow {

namespace {

// Insertion order keeps "op" first in the output.
using json = nlohmann::ordered_json;

json to_json(const Term& t) {
  json j;
  j["op"] = op_name(t.op());
  if (t.op() == Op::Var) j["name"] = t.name();
  if (t.is_unary()) j["children"] = json::array({to_json(t.arg())});
  if (t.is_binary()) j["children"] = json::array({to_json(t.lhs()), to_json(t.rhs())});
  return j;
}

[[noreturn]] void schema(const std::string& msg) { throw Error(Errc::SchemaError, msg); }

const json& child(const json& j, std::size_t arity, std::size_t k) {
  auto it = j.find("children");
  if (it == j.end() || !it->is_array() || it->size() != arity) {
    schema("op '" + j["op"].get<std::string>() + "' needs " + std::to_string(arity) + " children");
  }
  return (*it)[k];
}

Term from_json(const json& j) {
  if (!j.is_object()) schema("term node must be an object");
  auto op_it = j.find("op");
  if (op_it == j.end() || !op_it->is_string()) schema("term node lacks a string 'op'");
  const std::string op = op_it->get<std::string>();
  if (op == "zero" || op == "one") {
    if (j.contains("children")) schema("constant '" + op + "' takes no children");
    return op == "zero" ? Term::zero() : Term::one();
  }
  if (op == "var") {
    auto name = j.find("name");
    if (name == j.end() || !name->is_string() || !is_identifier(name->get<std::string>())) {
      schema("var node needs an identifier 'name'");
    }
    return Term::var(name->get<std::string>());
  }
  if (op == "neg") return Term::neg(from_json(child(j, 1, 0)));
  if (op == "inv") return Term::inv(from_json(child(j, 1, 0)));
  if (op == "add") return Term::add(from_json(child(j, 2, 0)), from_json(child(j, 2, 1)));
  if (op == "mul") return Term::mul(from_json(child(j, 2, 0)), from_json(child(j, 2, 1)));
  if (op == "div") return Term::div(from_json(child(j, 2, 0)), from_json(child(j, 2, 1)));
  schema("unknown op '" + op + "'");
}

}  // namespace

std::string serialize(const Term& t) { return to_json(t).dump(); }

Term deserialize(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) schema("malformed JSON");
  return from_json(j);
}

}  // namespace meadow
