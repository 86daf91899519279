// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "autobench/report.hpp"
#include "autobench/toolbox.hpp"

namespace autobench {

/// Prompt templates for the five decisions. The system template carries
/// {{MODELS}}, {{SELECT_TOOLS}} and {{TRANSFORM_TOOLS}} slots.
struct PromptSet {
  std::string system;
  std::string init;
  std::string experiment;
  std::string findings;
  std::string sufficiency;
  std::string conclusions;

  static const PromptSet& Default();
};

/// Fills the system template. Models render as "name: description",
/// tools as "module.Name: docstring"; entries are separated by blank
/// lines. Throws ValidationError for an empty registry or a tool without
/// a docstring, ConfigError when a slot is missing from the template.
std::string RenderSystemPrompt(const ToolRegistry& registry,
                               const std::vector<ModelDescriptor>& models,
                               const std::string& system_template = PromptSet::Default().system);

}  // namespace autobench
