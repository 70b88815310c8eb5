# Surgery Module
