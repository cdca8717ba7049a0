#pragma once

#include <string>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// A link placed in a disk with one marked arc (foot) per component. Bands
// attach at the feet, foot i on component i. All feet border one common face
// of the model, which is glued into the host face where the bands arrive.
struct LinkModel {
  std::string name;
  int type_index = 1;
  Diagram diagram;
  std::vector<int> feet;
  int component_count() const { return diagram.num_components(); }
};

// The band crosses `arc` entering from the face on `side` of it.
struct Pass {
  int arc = -1;
  bool over = true;
  Side side = Side::Left;
};

// One band: it leaves the host arc `foot` on `attach_side` at relative
// position `at` (0 = tail, 1 = head; orders several feet on one arc) and
// crosses the listed arcs in order before reaching the model.
struct BandRoute {
  int foot = -1;
  Side attach_side = Side::Left;
  double at = 0.5;
  std::vector<Pass> passes;
};

struct Attachment {
  LinkModel model;
  std::vector<BandRoute> routes;  // route i ends at model foot i
};

// The band sum of d with every attachment. Each band is drawn as two parallel
// untwisted strands and each pass adds two crossings with the passed arc.
// Model components take their orientation from the host through the band.
// Arcs may carry several feet but a passed arc carries nothing else.
// Errors: Argument for arity mismatch, bad indices, or a foot next to a graph
// vertex; Site when routes do not fit the faces or interfere.
Diagram band_sum(const Diagram& d, const std::vector<Attachment>& attachments);

// Built-in "hopf" (type 1) and "borromean" (type 2), then registered models.
std::vector<LinkModel> model_catalog();
// Throws Error(Argument) for an unknown name.
LinkModel model(const std::string& name);
// Checks arity, feet and the Brunnian property; appends to the catalog.
void register_model(const LinkModel& m);
// Throws Error(Argument) with the reason when m is not a usable model.
void validate_model(const LinkModel& m);

// A Hopf attachment at crossing c whose band sum equals the crossing change
// at c up to isotopy. Its two feet lie on the arcs at the corner chosen for
// the sign of c, next to c.
Attachment hopf_recipe(const Diagram& d, int c);
// The Hopf attachment with trivial bands at corner q (between slots q and
// q+1) of crossing c.
Attachment hopf_at_corner(const Diagram& d, int c, int q);

}  // namespace akmove
