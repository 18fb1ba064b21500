#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "dpcstar/majority.hpp"
#include "dpcstar/network.hpp"

namespace dpcstar {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A network file: the network itself plus the optional per-variable trees and
/// per-domain majority tables some checkers consume.
struct NetworkFile {
    Network network;
    std::map<std::string, TreeDomain> trees;  // keyed by variable name
    MajorityOperation majority;               // components keyed by domain name
};

/// JSON document with keys: variables, domains, constraints, and optionally
/// trees and majority. Tuples and tables reference value labels; the label
/// order under "domains" fixes matrix indexing.
NetworkFile parse_network_file(const std::string& text);
std::string serialize_network_file(const NetworkFile& f);

NetworkFile load_network_file(const std::string& path);
void save_network_file(const NetworkFile& f, const std::string& path);

}  // namespace dpcstar
