use std::sync::Arc;

use super::FinAdjunction;

impl FinAdjunction {
    /// `G^op ⊣ F^op` between the opposite categories; the unit becomes the
    /// counit and vice versa, with the same component ids.
    pub fn opposite(&self) -> FinAdjunction {
        let a_op = Arc::new(self.a().opposite());
        let b_op = Arc::new(self.b().opposite());
        let left = self.right().opposite(&b_op, &a_op);
        let right = self.left().opposite(&a_op, &b_op);
        FinAdjunction::from_components(
            left,
            right,
            self.counit().components().to_vec(),
            self.unit().components().to_vec(),
        )
        .expect("dual of a well-shaped adjunction is well-shaped")
    }
}
