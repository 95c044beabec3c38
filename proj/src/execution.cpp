#include "compmach/execution.hpp"

#include "compmach/errors.hpp"

namespace compmach {

Value eval_computon(const Machine& m, std::string_view computon_id,
                    const Value& v) {
  auto index = m.find_computon(computon_id);
  if (!index) {
    throw Error("unknown computon '" + std::string(computon_id) + "'");
  }
  const Computon& f = m.computons()[*index];
  if (v.data_type != f.dom) {
    throw TypeMismatchError("computon '" + f.id + "' expects " + f.dom +
                            " but the value is tagged " + v.data_type);
  }
  const Expression* expr = m.computon_expression(*index);
  if (expr == nullptr) {
    throw NoSemanticsError("computon '" + f.id +
                           "' carries no expression; it cannot be "
                           "evaluated");
  }
  try {
    return Value{expr->eval(v.value), f.cod};
  } catch (const ArithmeticOverflowError& e) {
    throw ArithmeticOverflowError("evaluating computon '" + f.id +
                                  "': " + e.what());
  }
}

Value eval_morphism(const Machine& m, const Morphism& mo, const Value& v) {
  if (mo.kind == MorphismKind::identity) {
    if (v.data_type != mo.data_type) {
      throw TypeMismatchError("identity on " + mo.data_type +
                              " applied to a value tagged " + v.data_type);
    }
    return v;
  }
  if (v.data_type != mo.input) {
    throw TypeMismatchError("morphism '" + mo.display() + "' expects " +
                            mo.input + " but the value is tagged " +
                            v.data_type);
  }
  Value current = v;
  for (const std::string& computon_id : mo.computons) {
    current = eval_computon(m, computon_id, current);
  }
  return current;
}

}  // namespace compmach
