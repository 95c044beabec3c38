#ifndef COMPMACH_MACHINE_IO_HPP
#define COMPMACH_MACHINE_IO_HPP

#include <string>
#include <string_view>

#include "compmach/machine.hpp"

namespace compmach {

/// Decodes a machine document (JSON text) into a raw description. The
/// document must carry the keys "data_types", "computons", "quiver" and
/// "rules"; "initial_configuration" is either an arrow-id -> 0|1 object or
/// a '1'/'0' string in arrow declaration order. Rule entries are integers
/// or rule names; names are resolved here. Throws DecodeError naming the
/// offending location; no validation beyond shape happens here.
MachineDescription decode_machine(std::string_view json_text);

/// Reads, decodes and validates a machine file. Throws DecodeError for IO
/// and shape problems and MachineValidationError for constraint findings.
Machine load_machine(const std::string& path);

/// Canonical serialisation: fixed key order, declaration order preserved,
/// rules as integers, the initial configuration as a canonical bit string,
/// optional fields present only when set, expression text verbatim.
/// load(serialise(m)) reproduces m exactly.
std::string machine_json(const Machine& m);

}  // namespace compmach

#endif  // COMPMACH_MACHINE_IO_HPP
