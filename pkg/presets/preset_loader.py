import json
import os
from typing import Dict, Iterable, List, Optional


class PresetError(ValueError):
    """A preset file lacks a key its experiment needs"""


class PresetLoader:
    """Load named experiment presets"""

    PRESET_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'preset')

    # Preset mapping
    PRESET_MAPPING = {
        'sandwich.default': 'sandwich.default.json',
        'sandwich.tampered': 'sandwich.tampered.json',
        'render.default': 'render.default.json',
        'pinch.default': 'pinch.default.json',
    }

    def names(self) -> List[str]:
        return sorted(self.PRESET_MAPPING)

    def load_preset(self, name: str) -> Optional[Dict]:
        """Load a preset by name; None when unknown or missing on disk"""
        if name not in self.PRESET_MAPPING:
            return None

        filepath = os.path.join(self.PRESET_DIR, self.PRESET_MAPPING[name])
        if not os.path.exists(filepath):
            return None

        with open(filepath, 'r') as f:
            return json.load(f)

    def load_file(self, path: str) -> Dict:
        """Load a preset-shaped JSON file given by path"""
        with open(path, 'r') as f:
            return json.load(f)

    def resolve(self, name_or_path: str) -> Optional[Dict]:
        """Named preset first, then a path on disk"""
        preset = self.load_preset(name_or_path)
        if preset is not None:
            return preset
        if os.path.exists(name_or_path):
            return self.load_file(name_or_path)
        return None

    def require(self, preset: Dict, keys: Iterable[str], source: str) -> Dict:
        missing = [key for key in keys if key not in preset]
        if missing:
            raise PresetError(f"preset {source} is missing {', '.join(missing)}")
        return preset
