#include "fourval/truth.hpp"

namespace fourval {

std::string_view unary_name(UnaryConnector op) {
  switch (op) {
    case UnaryConnector::Neg: return "~";
    case UnaryConnector::Conf: return "conf";
    case UnaryConnector::Compl: return "compl";
    case UnaryConnector::IsT: return "T";
    case UnaryConnector::IsB: return "B";
    case UnaryConnector::IsN: return "N";
    case UnaryConnector::IsF: return "F";
    case UnaryConnector::NonValid: return "inc";
  }
  return "?";
}

std::string_view binary_name(BinaryConnector op) {
  switch (op) {
    case BinaryConnector::Or: return "|";
    case BinaryConnector::And: return "&";
    case BinaryConnector::KJoin: return "(+)";
    case BinaryConnector::KMeet: return "(x)";
    case BinaryConnector::ODot: return "(o)";
    case BinaryConnector::ImpMat: return "=>";
    case BinaryConnector::ImpFde: return "->";
    case BinaryConnector::ImpHook: return "~>";
    case BinaryConnector::ImpFdeStar: return "*->";
    case BinaryConnector::ImpHookStar: return "*~>";
  }
  return "?";
}

}  // namespace fourval
