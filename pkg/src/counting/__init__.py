"""계수 표, 정확한 멱급수, 전수 열거."""
