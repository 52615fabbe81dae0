#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/ideals.hpp"
#include "qcat/topo.hpp"

namespace qcat {

// Schema violations carry a JSON-pointer-style location.
struct schema_error : structural_error {
  schema_error(const std::string& pointer, const std::string& what)
      : structural_error(pointer + ": " + what), pointer(pointer) {}
  std::string pointer;
};

struct InstanceFile {
  QuantalePtr quantale;  // file-level; may be null when only spaces are given

  struct NamedCategory {
    std::string name;
    VCategory cat;
  };
  struct NamedDistributor {
    std::string name;
    Distributor dist;
  };
  struct NamedSpace {
    std::string name;
    FinTop space;
  };

  std::vector<NamedCategory> categories;
  std::vector<NamedDistributor> distributors;
  std::vector<NamedSpace> spaces;
  std::optional<IdealClass> ideals;

  // validator outcomes per embedded object, in file order
  std::vector<std::pair<std::string, ValidationReport>> reports;
  bool all_valid() const {
    for (const auto& [name, rep] : reports)
      if (!rep.ok()) return false;
    return true;
  }

  const NamedCategory* find_category(const std::string& name) const;
  const NamedDistributor* find_distributor(const std::string& name) const;
  const NamedSpace* find_space(const std::string& name) const;
};

InstanceFile parse_instance_text(const std::string& text);
InstanceFile parse_instance_file(const std::string& path);

// Accepts all|order|fsw|radj|custom:<name>; flavor applies to fsw.
IdealClass parse_ideal_class(const std::string& name,
                             BelowFlavor fsw_below = BelowFlavor::Totally);

// Report renderers shared by the command-line front end.  Each returns a
// JSON document; the text renderers produce the human-readable form with
// identical verdicts.
std::string render_validation_json(const InstanceFile& file);
std::string render_validation_text(const InstanceFile& file);

struct WayBelowRender {
  std::string json;
  std::string text;
};
WayBelowRender render_waybelow(const VCategory& x, const IdealClass& cls,
                               const Limits& limits);
WayBelowRender render_continuity(const VCategory& x, const IdealClass& cls,
                                 const std::optional<Distributor>& probe,
                                 const Limits& limits);
WayBelowRender render_cocomplete(const VCategory& x, const IdealClass& cls,
                                 const Limits& limits);
WayBelowRender render_topo(const FinTop& space, FilterClass cls, const Limits& limits);

}  // namespace qcat
