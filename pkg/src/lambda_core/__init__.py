"""람다 골격, 선형/평면 항, 색칠, 핸들, 수술 연산."""
