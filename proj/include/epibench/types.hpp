#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace epibench {

/// Fixed-dimension state vector: one entry per compartment.
template <class Scalar, int Dim>
using Vec = Eigen::Matrix<Scalar, Dim, 1>;

template <class Scalar>
using Vec2 = Vec<Scalar, 2>;
template <class Scalar>
using Vec3 = Vec<Scalar, 3>;

/// Node-major trajectory storage: row i holds the state at grid node i.
template <class Scalar, int Dim>
using StateMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Dim>;

using Index = Eigen::Index;

enum class Model { si, sir };
enum class Method { euler, rk4, pc, reference };

inline constexpr int compartment_count(Model m) { return m == Model::si ? 2 : 3; }

inline std::string_view to_string(Model m) {
  return m == Model::si ? "si" : "sir";
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::euler: return "euler";
    case Method::rk4: return "rk4";
    case Method::pc: return "pc";
    case Method::reference: return "reference";
  }
  return "?";
}

inline Model parse_model(std::string_view s) {
  if (s == "si") return Model::si;
  if (s == "sir") return Model::sir;
  throw std::invalid_argument("unknown model tag: " + std::string(s));
}

inline Method parse_method(std::string_view s) {
  if (s == "euler") return Method::euler;
  if (s == "rk4") return Method::rk4;
  if (s == "pc") return Method::pc;
  if (s == "reference") return Method::reference;
  throw std::invalid_argument("unknown method tag: " + std::string(s));
}

/// Compartment labels in storage order.
inline const char* compartment_name(Model m, int c) {
  static constexpr const char* names[3] = {"S", "I", "R"};
  if (c < 0 || c >= compartment_count(m)) throw std::out_of_range("compartment index");
  return names[c];
}

}  // namespace epibench
