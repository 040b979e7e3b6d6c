#pragma once

#include <string>
#include <vector>

#include "cb/cartan.hpp"
#include "cb/types.hpp"

namespace cb {

/// Disks drawn over a square window centered on `domain` (plot subcommand).
std::string svg_disks(const Disk& domain, const std::vector<Disk>& disks,
                      const std::vector<Complex>& marks = {});

/// z-plane slices of a ball cover at fixed w values.
std::string svg_cover_slices(const Car20Cover& cover, double window,
                             const std::vector<Complex>& w_slices);

void save_text(const std::string& text, const std::string& path);

}  // namespace cb
